"""Finite-sample experiments on random graph models.

Random 4-regular graphs are asymptotically almost surely 4-connected, hence
globally rigid in every analytic normed plane; dense Erdos-Renyi graphs
behave similarly.  The asymptotic statements are not desk-checkable, so the
toolkit only reports empirical frequencies at small n; the same harness is
exposed as `planerigidity experiment`.
"""

import random

from planerigidity import is_globally_rigid_analytic
from planerigidity.randomgraphs import gnp_graph, random_regular_graph

rng = random.Random(11)
samples = 60

print(f"{samples} samples per row, seeded")
print()
print("random 4-regular graphs:")
for n in (8, 10, 12):
    hits = sum(
        is_globally_rigid_analytic(
            random_regular_graph(n, 4, rng.randrange(2**63))
        ).globally_rigid_analytic
        for _ in range(samples)
    )
    print(f"  n={n:>2}: globally rigid {hits}/{samples}")

print()
print("Erdos-Renyi G(n, p):")
for n, p in [(10, 0.3), (10, 0.5), (10, 0.7)]:
    hits = sum(
        is_globally_rigid_analytic(
            gnp_graph(n, p, rng.randrange(2**63))
        ).globally_rigid_analytic
        for _ in range(samples)
    )
    print(f"  n={n}, p={p}: globally rigid {hits}/{samples}")

print()
print("sparser draws fail mostly through vertices of degree below 3, which")
print("can never lie on a circuit of the sparsity matroid.")
