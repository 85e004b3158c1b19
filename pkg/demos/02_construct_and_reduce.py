"""Growing a graph with the construction moves and shrinking it back.

Every 2-connected, redundantly rigid graph (in an analytic normed plane)
can be generated from K5- or B1 by edge additions, K4--extensions and
generalised vertex splits, with every intermediate graph staying in the
class.  The reduction engine inverts this: it searches for an admissible
edge-deletion, K4--reduction or edge-reduction, take whichever comes first
in canonical order, and repeats until a base graph appears.
"""

from planerigidity import is_isomorphic, random_m22_graph, reduce_to_base
from planerigidity.moves import rebuild_from_trace

G = random_m22_graph(steps=8, seed=2024)
print(f"grown graph: n={G.n}, m={G.m}")

trace = reduce_to_base(G)
print(f"reduces to {trace.base} in {len(trace.steps)} moves:")
for step in trace.steps:
    H = step.result
    print(f"  {step.move.kind:<22} {str(step.move.params):<18} -> n={H.n:>2} m={H.m:>2}  [{step.result_hash}]")

print()
print("replaying the forward script from the base:")
R = rebuild_from_trace(trace)
print(f"  rebuilt graph: n={R.n}, m={R.m}")
print(f"  isomorphic to the original: {is_isomorphic(R, G)}")

print()
print("the forward script itself (what `planerigidity reduce` emits):")
print(f"  base {trace.base}")
for mv in trace.forward_script():
    print("  " + mv.kind + "".join(f" {x}" for x in mv.params))
