"""The search-complement algorithm on complete graphs with self-loops.

One step of the walk with a position-controlled Hadamard oracle suppresses a
single node: starting from ``|r> (x) |s>`` with target t, measuring the
position register yields probability 1/4^n at node ``t XOR r`` and
1/4^n + 1/2^n everywhere else, independent of s.

Three routes compute that distribution and are cross-validated against each
other:

* ``DENSE`` materializes the full 4^n x 4^n operator (n <= 6),
* ``STATEVECTOR`` applies the gates directly to the amplitude vector and
  scales to n <= 14 without ever forming an operator,
* ``CLOSED_FORM`` evaluates the two-case analytic distribution.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import graphs, probability, walk
from .graphs import ShiftModel
from .walk import EvolutionOperator

MAX_DENSE_QUBITS = 6
MAX_STATEVECTOR_QUBITS = 14
CROSS_VALIDATION_ATOL = 1e-12
# Past this many nodes per register, cross-validation samples (r, s) pairs
# instead of sweeping all of them.
_EXHAUSTIVE_RS_LIMIT = 256


class Method(enum.Enum):
    DENSE = "dense"
    STATEVECTOR = "statevector"
    CLOSED_FORM = "closed-form"


@dataclass(frozen=True)
class ComplementSpec:
    """Problem instance: register size, target node and initial basis state."""

    n: int
    target: int
    coin_init: int = 0
    pos_init: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        n_nodes = 2**self.n
        for name in ("target", "coin_init", "pos_init"):
            value = getattr(self, name)
            if not 0 <= value < n_nodes:
                raise ValueError(f"{name} = {value} out of range for {n_nodes} nodes")


@dataclass(frozen=True)
class ComplementResult:
    distribution: np.ndarray
    suppressed_node: int
    method: Method


def build_complement_operator(n: int, target: int) -> EvolutionOperator:
    """Dense one-step operator: CNOT-model shift, position-controlled Hadamard
    oracle on the coin register, position registers pre-rotated into superposition.

    Before the shift the operator splits into two structural branches: block
    (i, i) carries the position-Hadamard with its target row removed, and row
    t of block (i, j) carries ``h[i, j]`` times that row.  The CNOT-model
    shift then just relabels row (i, a) as (i, a XOR i), so the matrix is
    filled in place with no large products.
    """
    if not 1 <= n <= MAX_DENSE_QUBITS:
        raise ValueError(f"dense path supports n in 1..{MAX_DENSE_QUBITS}, got {n}")
    n_nodes = 2**n
    if not 0 <= target < n_nodes:
        raise ValueError(f"target {target} out of range for {n_nodes} nodes")
    h = walk.hadamard_coin(n)
    h_no_target = h.copy()
    h_no_target[target, :] = 0.0
    u = np.zeros((n_nodes**2, n_nodes**2), dtype=np.complex128)
    view = u.reshape(n_nodes, n_nodes, n_nodes, n_nodes)
    coin = np.arange(n_nodes)[:, None]
    pos = np.arange(n_nodes)[None, :]
    # identity branch: row (i, a) of block column i is h_no_target[a XOR i]
    view[coin, pos, coin, :] = h_no_target[pos ^ coin]
    # oracle branch: row (i, t XOR i) of block column j is h[i, j] * h[t]
    view[coin[:, 0], coin[:, 0] ^ target, :, :] += h[:, :, None] * h[target][None, None, :]
    return EvolutionOperator(matrix=u, n=n, shift_model=ShiftModel.CNOT,
                             coin="complement-oracle", init_layer=True)


def closed_form_distribution(spec: ComplementSpec) -> ComplementResult:
    """Analytic distribution: 1/4^n at node target XOR coin_init, 1/4^n + 1/2^n elsewhere."""
    n_nodes = 2**spec.n
    suppressed = spec.target ^ spec.coin_init
    dist = np.full(n_nodes, 1.0 / 4**spec.n + 1.0 / 2**spec.n)
    dist[suppressed] = 1.0 / 4**spec.n
    return ComplementResult(distribution=dist, suppressed_node=suppressed,
                            method=Method.CLOSED_FORM)


def _generic_operator(n: int, target: int) -> EvolutionOperator:
    """The same operator assembled through the shift/coin machinery.

    Unlike :func:`build_complement_operator` this route multiplies the full
    shift, perturbed-coin and init-layer matrices together, so any defect in
    the coin construction shows up in the product.
    """
    shift = graphs.shift_operator(n, ShiftModel.CNOT)
    coin = walk.PerturbedCoin(original=walk.hadamard_coin(n),
                              perturbation=np.eye(2**n), target=target)
    return walk.evolution_operator(shift, coin, with_init_layer=True)


def run_complement_dense(spec: ComplementSpec) -> ComplementResult:
    """Apply the dense generic-machinery operator to the initial state and measure."""
    if spec.n > MAX_DENSE_QUBITS:
        raise ValueError(f"dense path supports n in 1..{MAX_DENSE_QUBITS}, got {spec.n}")
    op = _generic_operator(spec.n, spec.target)
    state = walk.evolve(walk.basis_state(spec.n, spec.coin_init, spec.pos_init), op, 1)
    dist = probability.node_probabilities(state)
    return ComplementResult(distribution=dist,
                            suppressed_node=spec.target ^ spec.coin_init,
                            method=Method.DENSE)


def _apply_h_on_axis(amp: np.ndarray, axis: int, qubit: int) -> np.ndarray:
    """Single-qubit Hadamard on one bit of one register axis of a (coin, pos) grid."""
    m, nn = amp.shape
    size = amp.shape[axis]
    low = 1 << qubit
    if axis == 0:
        a = amp.reshape(size // (2 * low), 2, low, nn)
        a0, a1 = a[:, 0], a[:, 1]
        out = np.empty_like(a)
        out[:, 0] = a0 + a1
        out[:, 1] = a0 - a1
    else:
        a = amp.reshape(m, size // (2 * low), 2, low)
        a0, a1 = a[:, :, 0], a[:, :, 1]
        out = np.empty_like(a)
        out[:, :, 0] = a0 + a1
        out[:, :, 1] = a0 - a1
    return (out / np.sqrt(2)).reshape(m, nn)


def run_complement_statevector(spec: ComplementSpec) -> ComplementResult:
    """Gate-by-gate statevector run; never materializes an operator.

    Applies H to every position qubit, the position-controlled Hadamard layer
    on the coin register when the position equals the target, then the
    coin-to-position CNOT cascade, and measures the position register.
    """
    if spec.n > MAX_STATEVECTOR_QUBITS:
        raise ValueError(f"statevector path supports n <= {MAX_STATEVECTOR_QUBITS}, got {spec.n}")
    n_nodes = 2**spec.n
    amp = np.zeros((n_nodes, n_nodes), dtype=np.complex128)
    amp[spec.coin_init, spec.pos_init] = 1.0
    for q in range(spec.n):
        amp = _apply_h_on_axis(amp, axis=1, qubit=q)
    # controlled H^(x)n on the coin register, active only in the target column
    col = amp[:, spec.target].reshape(n_nodes, 1)
    for q in range(spec.n):
        col = _apply_h_on_axis(col, axis=0, qubit=q)
    amp[:, spec.target] = col[:, 0]
    # CNOT cascade coin_i -> position_i: (c, p) -> (c, p XOR c)
    coin = np.arange(n_nodes)[:, None]
    pos = np.arange(n_nodes)[None, :]
    amp = amp[coin, pos ^ coin]
    dist = (np.abs(amp)**2).sum(axis=0)
    return ComplementResult(distribution=dist,
                            suppressed_node=spec.target ^ spec.coin_init,
                            method=Method.STATEVECTOR)


class CrossValidationError(ValueError):
    """Raised when the three computation routes disagree on some case."""

    def __init__(self, n: int, target: int, coin_init: int, pos_init: int, deviation: float):
        self.n = n
        self.target = target
        self.coin_init = coin_init
        self.pos_init = pos_init
        self.deviation = deviation
        super().__init__(
            f"methods disagree by {deviation:.3e} on n={n}, target={target}, "
            f"coin_init={coin_init}, pos_init={pos_init}"
        )


@dataclass(frozen=True)
class CrossValidationReport:
    n_max: int
    cases: int
    max_deviation: float


def cross_validate(n_max: int, tol: float = CROSS_VALIDATION_ATOL,
                   rs_limit: int | None = None) -> CrossValidationReport:
    """Check all three routes against each other for every register size and target.

    Initial (coin, position) pairs are swept exhaustively up to 256 pairs per
    target (n <= 4) and sampled deterministically beyond that; ``rs_limit``
    overrides the cap.  The dense route goes through the full shift/coin
    matrix products where exhaustive (n <= 4) and through the direct fill
    construction beyond, where the operators get large.  Raises
    :class:`CrossValidationError` naming the first disagreeing case.
    """
    if not 1 <= n_max <= MAX_DENSE_QUBITS:
        raise ValueError(f"n_max must be in 1..{MAX_DENSE_QUBITS}, got {n_max}")
    cases = 0
    worst = 0.0
    for n in range(1, n_max + 1):
        n_nodes = 2**n
        all_pairs = n_nodes * n_nodes
        limit = rs_limit if rs_limit is not None else \
            (all_pairs if all_pairs <= _EXHAUSTIVE_RS_LIMIT else 16)
        if limit >= all_pairs:
            pairs = [(r, s) for r in range(n_nodes) for s in range(n_nodes)]
        else:
            rng = np.random.default_rng(n)
            picks = rng.choice(all_pairs, size=limit, replace=False)
            pairs = [(int(k) // n_nodes, int(k) % n_nodes) for k in picks]
        for target in range(n_nodes):
            op = _generic_operator(n, target) if all_pairs <= _EXHAUSTIVE_RS_LIMIT \
                else build_complement_operator(n, target)
            for r, s in pairs:
                spec = ComplementSpec(n=n, target=target, coin_init=r, pos_init=s)
                # column r*2^n + s of the operator is the evolved basis state
                state = walk.WalkerState(n=n, amplitudes=op.matrix[:, r * n_nodes + s])
                dense = probability.node_probabilities(state)
                sv = run_complement_statevector(spec).distribution
                closed = closed_form_distribution(spec).distribution
                dev = max(np.abs(dense - sv).max(), np.abs(dense - closed).max(),
                          np.abs(sv - closed).max())
                worst = max(worst, float(dev))
                cases += 1
                if dev > tol:
                    raise CrossValidationError(n, target, r, s, float(dev))
    return CrossValidationReport(n_max=n_max, cases=cases, max_deviation=worst)


def run(spec: ComplementSpec, method: Method = Method.STATEVECTOR) -> ComplementResult:
    """Run the complement algorithm with the requested computation route."""
    if method is Method.DENSE:
        return run_complement_dense(spec)
    if method is Method.STATEVECTOR:
        return run_complement_statevector(spec)
    return closed_form_distribution(spec)


def result_to_json(spec: ComplementSpec, result: ComplementResult) -> dict:
    """JSON-ready dict for a complement run."""
    return {
        "n": spec.n,
        "target": spec.target,
        "coin_init": spec.coin_init,
        "pos_init": spec.pos_init,
        "method": result.method.value,
        "distribution": [float(p) for p in result.distribution],
        "suppressed_node": result.suppressed_node,
    }
