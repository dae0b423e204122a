#!/usr/bin/env python3
"""How many shots until the measured histogram matches theory?

Shots are drawn from the exact node distribution with a counter-based,
seeded generator, so every run is reproducible.  The statistical distance
(half the absolute difference summed) decays like 1/sqrt(shots).
"""

import numpy as np

from walkcomplement import ComplementSpec, closed_form_distribution, l1_distance
from walkcomplement.sampling import empirical, sample

dist = closed_form_distribution(ComplementSpec(n=2, target=1)).distribution
print("exact K_4 complement distribution:", dist)
print()

print(f"{'shots':>9} {'median l1':>10} {'max l1':>8}   (20 seeds each)")
for shots in (128, 1024, 8192, 10**5, 10**6):
    distances = [l1_distance(empirical(sample(dist, shots, seed)), dist)
                 for seed in range(20)]
    print(f"{shots:>9} {np.median(distances):>10.4g} {max(distances):>8.4g}")
print()

counts = sample(dist, 8192, seed=42)
print("8192 shots with seed 42:", counts.counts)
print("same seed again:       ", sample(dist, 8192, seed=42).counts)
print()

# the marked node needs ever more shots to resolve as n grows: its
# probability is 1/4^n, so shots must comfortably exceed 4^n
for n, shots in ((2, 8192), (3, 10**6), (6, 10**7)):
    d = closed_form_distribution(ComplementSpec(n=n, target=1)).distribution
    counts = sample(d, shots, seed=0)
    seen = counts.counts[1]
    print(f"n={n}: p(marked) = {d[1]:.3g}, {shots} shots -> {seen} hits on the "
          f"marked node (expected {shots * d[1]:.1f})")
