"""Shot-based simulation of the measurement step.

Since the circuit is deterministic up to measurement, shots are drawn from the
theoretical node distribution rather than re-simulating the statevector per
shot.  The generator is counter-based (Philox) so batches across seeds are
reproducible and safe to parallelize.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .probability import l1_distance

GENERATOR = "philox4x64"
_SUM_ATOL = 1e-9


@dataclass(frozen=True)
class ShotCounts:
    n_nodes: int
    counts: tuple[int, ...]
    shots: int
    seed: int

    def __post_init__(self):
        if sum(self.counts) != self.shots:
            raise ValueError("counts do not add up to the number of shots")


def sample(p, shots: int, seed: int) -> ShotCounts:
    """Multinomial draw of ``shots`` measurements from distribution ``p``.

    Identical (p, shots, seed) triples always produce identical counts.
    """
    p = np.asarray(p, dtype=float)
    if shots < 1:
        raise ValueError("shots must be >= 1")
    if abs(p.sum() - 1.0) > _SUM_ATOL or (p < 0).any():
        raise ValueError("p is not a probability distribution")
    rng = np.random.Generator(np.random.Philox(seed))
    counts = rng.multinomial(shots, p)
    return ShotCounts(n_nodes=p.shape[0], counts=tuple(int(k) for k in counts),
                      shots=shots, seed=seed)


def empirical(c: ShotCounts) -> np.ndarray:
    """Observed frequencies counts / shots."""
    return np.asarray(c.counts, dtype=float) / c.shots


def counts_to_json(c: ShotCounts, theory=None) -> dict:
    """JSON-ready dict with counts, frequencies and the distance to theory."""
    freq = empirical(c)
    out = {
        "shots": c.shots,
        "seed": c.seed,
        "generator": GENERATOR,
        "counts": list(c.counts),
        "empirical": [float(f) for f in freq],
    }
    if theory is not None:
        out["l1_vs_theory"] = l1_distance(freq, theory)
    return out
