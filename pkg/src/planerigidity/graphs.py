"""Simple graphs with dense integer labels, plus the connectivity and
separation primitives the rest of the library is built on.

Vertices are always 0..n-1.  Operations that delete vertices renumber the
survivors and report the relabeling map, so matrix column indexing stays
trivial downstream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph: no loops, no parallel edges, labels 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u},{v}) for n={self.n}")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        return Graph(n, frozenset(_norm_edge(u, v) for u, v in edges))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbr = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return tuple(frozenset(s) for s in nbr)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def min_degree(self) -> int:
        return min((self.degree(v) for v in range(self.n)), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def add_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        return Graph(self.n, self.edges | {_norm_edge(u, v)})

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = _norm_edge(u, v)
        if e not in self.edges:
            raise ValueError(f"edge ({u},{v}) not present")
        return Graph(self.n, self.edges - {e})

    def add_vertex(self) -> "Graph":
        return Graph(self.n + 1, self.edges)

    def remove_vertices(self, drop) -> tuple["Graph", dict[int, int]]:
        """Delete the given vertices; return the renumbered graph and the
        old-label -> new-label map for the survivors."""
        drop = set(drop)
        keep = [v for v in range(self.n) if v not in drop]
        relabel = {old: new for new, old in enumerate(keep)}
        edges = frozenset(
            _norm_edge(relabel[u], relabel[v])
            for u, v in self.edges
            if u not in drop and v not in drop
        )
        return Graph(len(keep), edges), relabel

    def induced_edges(self, vertices) -> frozenset[Edge]:
        vs = set(vertices)
        return frozenset(e for e in self.edges if e[0] in vs and e[1] in vs)

    def subgraph(self, vertices) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on the given vertices, renumbered densely."""
        keep = sorted(set(vertices))
        relabel = {old: new for new, old in enumerate(keep)}
        edges = frozenset(
            _norm_edge(relabel[u], relabel[v]) for u, v in self.induced_edges(keep)
        )
        return Graph(len(keep), edges), relabel

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def components(self) -> list[set[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = {s}
            seen[s] = True
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.add(w)
                        stack.append(w)
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


@dataclass(frozen=True)
class InducedPart:
    """One side of a separation, in the original vertex labels."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class Separation:
    """A 2-vertex-separation or 3-edge-separation of a graph.

    For the vertex kind the parts are induced subgraphs sharing exactly the
    two cut vertices; for the edge kind the parts are vertex-disjoint and the
    cut is the set of three removed edges.  Nontriviality follows the usual
    conventions: vertex kind, neither part is a K4; edge kind, the three cut
    edges are pairwise non-adjacent.
    """

    kind: str  # "vertex-cut-2" | "edge-cut-3"
    parts: tuple[InducedPart, InducedPart]
    cut: tuple
    nontrivial: bool


def is_k_connected(G: Graph, k: int) -> bool:
    """k-connectivity for k in {1,2,3}.

    Complete graphs have no vertex cut at all, so they count as k-connected
    for every k here (in particular K2 passes for k=1 and k=2); K1 is only
    1-connected.
    """
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    if G.n < 1:
        raise ValueError("empty graph")
    if G.n == 1:
        return k == 1
    if G.is_complete():
        return True
    if not G.is_connected():
        return False
    if k == 1:
        return True
    # brute cut search is plenty fast at the sizes this library targets
    for size in range(1, k):
        for cut in itertools.combinations(range(G.n), size):
            rest = [v for v in range(G.n) if v not in cut]
            if len(rest) < 2:
                continue
            H, _ = G.subgraph(rest)
            if not H.is_connected():
                return False
    return True


def _min_st_edge_cut(G: Graph, s: int, t: int) -> int:
    """Max-flow with unit edge capacities via repeated BFS augmentation."""
    # residual capacities on directed arcs
    cap = {}
    for u, v in G.edges:
        cap[(u, v)] = 1
        cap[(v, u)] = 1
    flow = 0
    while True:
        parent = {s: None}
        queue = [s]
        while queue and t not in parent:
            u = queue.pop(0)
            for w in G.adj[u]:
                if w not in parent and cap[(u, w)] > 0:
                    parent[w] = u
                    queue.append(w)
        if t not in parent:
            return flow
        v = t
        while parent[v] is not None:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1


def edge_connectivity(G: Graph) -> int:
    """Size of a minimum edge cut (0 for disconnected or single-vertex)."""
    if G.n < 2 or not G.is_connected():
        return 0
    return min(_min_st_edge_cut(G, 0, t) for t in range(1, G.n))


def _part(G: Graph, vertices) -> InducedPart:
    vs = tuple(sorted(vertices))
    return InducedPart(vs, tuple(sorted(G.induced_edges(vs))))


def _bipartitions(items):
    """Unordered two-block partitions of a list, both blocks non-empty."""
    n = len(items)
    for mask in range(1, 1 << (n - 1)):
        left = [items[i] for i in range(n) if mask >> i & 1]
        right = [items[i] for i in range(n) if not mask >> i & 1]
        yield left, right


def enumerate_separations(G: Graph, kind: str) -> list[Separation]:
    """All 2-vertex- or 3-edge-separations, exhaustively.

    kind: "vertex-cut-2" or "edge-cut-3".  Each separation is reported once
    up to part order.
    """
    if G.n < 4:
        raise ValueError("separation enumeration needs n >= 4")
    out = []
    if kind == "vertex-cut-2":
        for a, b in itertools.combinations(range(G.n), 2):
            rest = [v for v in range(G.n) if v not in (a, b)]
            H, back = G.subgraph(rest)
            comps = H.components()
            if len(comps) < 2:
                continue
            inv = {new: old for old, new in back.items()}
            comps_old = [{inv[v] for v in c} for c in comps]
            for left, right in _bipartitions(comps_old):
                v1 = set().union(*left) | {a, b}
                v2 = set().union(*right) | {a, b}
                p1, p2 = _part(G, v1), _part(G, v2)
                nontriv = not (
                    _is_k4_part(G, v1) or _is_k4_part(G, v2)
                )
                out.append(
                    Separation("vertex-cut-2", (p1, p2), (a, b), nontriv)
                )
    elif kind == "edge-cut-3":
        edges = G.sorted_edges()
        for cut in itertools.combinations(edges, 3):
            rem = Graph(G.n, G.edges - set(cut))
            comps = rem.components()
            if len(comps) < 2:
                continue
            for left, right in _bipartitions(comps):
                v1 = set().union(*left)
                v2 = set().union(*right)
                crossing = {
                    e for e in cut
                    if (e[0] in v1) != (e[1] in v1)
                }
                if len(crossing) != 3:
                    continue
                ends = [x for e in cut for x in e]
                nontriv = len(set(ends)) == 6
                out.append(
                    Separation("edge-cut-3", (_part(G, v1), _part(G, v2)), cut, nontriv)
                )
    else:
        raise ValueError(f"unknown separation kind {kind!r}")
    # dedupe unordered part pairs
    seen = set()
    uniq = []
    for s in out:
        key = frozenset((s.parts[0].vertices, s.parts[1].vertices)), s.cut
        if key not in seen:
            seen.add(key)
            uniq.append(s)
    return uniq


def _is_k4_part(G: Graph, vertices) -> bool:
    return len(vertices) == 4 and len(G.induced_edges(vertices)) == 6


# ---------------------------------------------------------------------------
# isomorphism


def _wl_colors(G: Graph, init=None, rounds: int | None = None) -> list[int]:
    """Iterated neighbourhood color refinement (1-WL)."""
    color = list(init) if init is not None else [G.degree(v) for v in range(G.n)]
    for _ in range(rounds if rounds is not None else G.n):
        sig = [
            (color[v], tuple(sorted(color[w] for w in G.adj[v])))
            for v in range(G.n)
        ]
        canon = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [canon[s] for s in sig]
        if new == color:
            break
        color = new
    return color


def _extend_isomorphism(G: Graph, H: Graph, cg, ch, mapping, used, order):
    if len(mapping) == G.n:
        return dict(mapping)
    v = order[len(mapping)]
    for w in range(H.n):
        if w in used or ch[w] != cg[v]:
            continue
        ok = True
        for u, img in mapping.items():
            if G.has_edge(u, v) != H.has_edge(img, w):
                ok = False
                break
        if ok:
            mapping[v] = w
            used.add(w)
            res = _extend_isomorphism(G, H, cg, ch, mapping, used, order)
            if res is not None:
                return res
            del mapping[v]
            used.remove(w)
    return None


def find_isomorphism(G: Graph, H: Graph) -> dict[int, int] | None:
    """An edge-preserving bijection G -> H, or None.

    Backtracking over WL color classes; intended for the small graphs this
    library works with (roughly n <= 60 for the structured inputs here).
    """
    if G.n != H.n or G.m != H.m:
        return None
    if sorted(G.degree(v) for v in range(G.n)) != sorted(
        H.degree(v) for v in range(H.n)
    ):
        return None
    cg = _wl_colors(G)
    ch = _wl_colors(H)
    if sorted(cg) != sorted(ch):
        return None
    # match rarest colors first to cut the branching early
    freq = {c: cg.count(c) for c in set(cg)}
    order = sorted(range(G.n), key=lambda v: (freq[cg[v]], -G.degree(v), v))
    return _extend_isomorphism(G, H, cg, ch, {}, set(), order)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return find_isomorphism(G, H) is not None


def _automorphism_with(G: Graph, pins: dict[int, int]) -> dict[int, int] | None:
    """An automorphism of G extending the pinned partial map, or None."""
    c = _wl_colors(G)
    for v, w in pins.items():
        if c[v] != c[w]:
            return None
    freq = {x: c.count(x) for x in set(c)}
    order = list(pins) + sorted(
        (v for v in range(G.n) if v not in pins),
        key=lambda v: (freq[c[v]], -G.degree(v), v),
    )
    mapping = {}
    used = set()
    for v in pins:
        w = pins[v]
        if w in used:
            return None
        mapping[v] = w
        used.add(w)
    # re-check pin consistency on edges among pinned vertices
    for u in pins:
        for v in pins:
            if u < v and G.has_edge(u, v) != G.has_edge(pins[u], pins[v]):
                return None
    return _extend_isomorphism(G, G, c, c, mapping, used, order)


def is_vertex_transitive(G: Graph) -> bool:
    return all(
        _automorphism_with(G, {0: v}) is not None for v in range(1, G.n)
    )


def is_edge_transitive(G: Graph) -> bool:
    edges = G.sorted_edges()
    if not edges:
        return True
    a, b = edges[0]
    for e in edges[1:]:
        if _automorphism_with(G, {a: e[0], b: e[1]}) is None and \
           _automorphism_with(G, {a: e[1], b: e[0]}) is None:
            return False
    return True
