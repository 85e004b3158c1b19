"""Named graphs used throughout tests, demos and the reduction engine.

K5- and B1 are the two base graphs of the construction moves; B2 is the
third small circuit of the sparsity matroid.  Names K5-/B1 also appear as
base tokens in the move-script format.
"""

import itertools

from .graphs import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(
        a + b, ((i, a + j) for i in range(a) for j in range(b))
    )


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def wheel_graph(k: int) -> Graph:
    """Hub 0 joined to a k-cycle on 1..k (so W5 = wheel_graph(5), n = 6)."""
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    return Graph.from_edges(k + 1, edges)


def prism_graph() -> Graph:
    """Two triangles joined by a perfect matching."""
    return Graph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


def k5_minus() -> Graph:
    """K5 minus one edge; the smallest circuit of the (2,2) matroid."""
    edges = set(itertools.combinations(range(5), 2)) - {(3, 4)}
    return Graph.from_edges(5, edges)


def b1() -> Graph:
    """Two K4 blocks sharing the edge 01 (6 vertices, 11 edges)."""
    e1 = itertools.combinations([0, 1, 2, 3], 2)
    e2 = itertools.combinations([0, 1, 4, 5], 2)
    return Graph.from_edges(6, set(e1) | set(e2))


def b2() -> Graph:
    """Two K4 blocks sharing vertex 0, plus one cross edge (7 vertices, 13 edges)."""
    e1 = set(itertools.combinations([0, 1, 2, 3], 2))
    e2 = set(itertools.combinations([0, 4, 5, 6], 2))
    return Graph.from_edges(7, e1 | e2 | {(1, 4)})


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def two_k4_shared_vertex() -> Graph:
    """Two K4 blocks glued at vertex 0 (7 vertices, 12 edges)."""
    e1 = set(itertools.combinations([0, 1, 2, 3], 2))
    e2 = set(itertools.combinations([0, 4, 5, 6], 2))
    return Graph.from_edges(7, e1 | e2)
