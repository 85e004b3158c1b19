"""Deciding global rigidity for a gallery of named graphs.

A graph on five or more vertices is globally rigid in every analytic normed
plane exactly when it is 2-connected and its edge set forms a connected
matroid in the simple (2,2)-sparsity matroid.  The decision is purely
combinatorial; this script walks through graphs where the verdict differs
from the Euclidean plane, which is the whole point of the theory.
"""

from planerigidity import (
    b1,
    b2,
    complete_bipartite,
    complete_graph,
    is_globally_rigid_analytic,
    k5_minus,
    two_k4_shared_vertex,
    wheel_graph,
)

gallery = {
    "K5 minus an edge": k5_minus(),
    "two K4 blocks sharing an edge (B1)": b1(),
    "two K4 blocks at a vertex plus a cross edge (B2)": b2(),
    "wheel W5": wheel_graph(5),
    "K_{3,6}": complete_bipartite(3, 6),
    "two K4 blocks sharing one vertex": two_k4_shared_vertex(),
    "K6": complete_graph(6),
}

for name, G in gallery.items():
    report = is_globally_rigid_analytic(G)
    print(f"{name}  (n={G.n}, m={G.m})")
    print(f"  globally rigid (analytic plane): {report.globally_rigid_analytic}")
    print(f"  globally rigid (Euclidean):      {report.euclidean_verdict}")
    for key, value in sorted(report.reasons.items()):
        print(f"  {key}: {value}")
    if report.sufficient_conditions_hit:
        print(f"  sufficient conditions: {', '.join(report.sufficient_conditions_hit)}")
    print()

print("Contrast pairs worth noticing:")
print(" * the wheel W5 is globally rigid in the Euclidean plane but not in")
print("   any analytic normed plane: it is minimally rigid there, so no edge")
print("   is redundant.")
print(" * B1 goes the other way: reflecting one K4 block across the shared")
print("   edge breaks Euclidean global rigidity, but non-Euclidean planes")
print("   have no such reflection.")
