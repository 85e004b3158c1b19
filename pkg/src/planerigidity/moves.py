"""Construction and deconstruction moves on M(2,2)-connected graphs.

The forward moves (edge additions, 1-extensions, K4--extensions,
generalised vertex splits) grow a graph from the base graphs K5- and B1;
the reductions invert them.  The reduction engine searches for an
admissible move semantically: apply the candidate, keep it if the result is
still M(2,2)-connected.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field

from . import catalog
from .graphs import Edge, Graph, _norm_edge, enumerate_separations, is_isomorphic
from .sparsity import is_m22_connected

FORWARD_KINDS = (
    "edge-addition",
    "1-extension",
    "k4minus-extension",
    "generalized-vertex-split",
)
REDUCTION_KINDS = (
    "edge-deletion",
    "1-reduction",
    "k4minus-reduction",
    "edge-reduction",
)
KINDS = FORWARD_KINDS + REDUCTION_KINDS


class MoveError(ValueError):
    """A move precondition failed; the message names the condition."""


@dataclass(frozen=True)
class Move:
    """One construction step or its inverse.

    params by kind:
      edge-addition / edge-deletion   (u, v)
      1-extension                     (x, y, z)    delete xy, new vertex adjacent to x,y,z
      1-reduction                     (v, x, y)    delete degree-3 vertex v, add xy
      k4minus-extension               (u, v)       replace edge uv by the K4-minus-edge gadget
      k4minus-reduction               (u1, u2)     delete the adjacent degree-3 pair, add the missing edge
      generalized-vertex-split        (v, x, *n2)  split v; the new vertex takes the neighbours in n2
      edge-reduction                  (a, b, c)    contract ab onto a and drop the edge ac
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise MoveError(f"unknown move kind {self.kind!r}")


def graph_hash(G: Graph) -> str:
    text = f"{G.n}:" + ",".join(f"{u}-{v}" for u, v in G.sorted_edges())
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _apply_full(G: Graph, move: Move) -> tuple[Graph, dict[int, int] | None]:
    """Apply a move; also return the relabeling map when vertices vanish."""
    kind, p = move.kind, move.params

    if kind == "edge-addition":
        u, v = p
        if not (0 <= u < G.n and 0 <= v < G.n and u != v):
            raise MoveError("edge-addition: endpoints must be distinct existing vertices")
        if G.has_edge(u, v):
            raise MoveError("edge-addition: edge already present")
        return G.add_edge(u, v), None

    if kind == "edge-deletion":
        u, v = p
        if not G.has_edge(u, v):
            raise MoveError("edge-deletion: edge not present")
        return G.remove_edge(u, v), None

    if kind == "1-extension":
        x, y, z = p
        if not G.has_edge(x, y):
            raise MoveError("1-extension: xy must be an edge")
        if z in (x, y) or not 0 <= z < G.n:
            raise MoveError("1-extension: z must be a third existing vertex")
        w = G.n
        edges = (G.edges - {_norm_edge(x, y)}) | {(x, w), (y, w), (z, w)}
        return Graph.from_edges(G.n + 1, edges), None

    if kind == "1-reduction":
        v, x, y = p
        if G.degree(v) != 3:
            raise MoveError("1-reduction: v must have degree 3")
        if x not in G.adj[v] or y not in G.adj[v] or x == y:
            raise MoveError("1-reduction: x and y must be distinct neighbours of v")
        if G.has_edge(x, y):
            raise MoveError("1-reduction: xy must not already be an edge")
        H, relabel = G.remove_vertices([v])
        return H.add_edge(relabel[x], relabel[y]), relabel

    if kind == "k4minus-extension":
        u, v = p
        if not G.has_edge(u, v):
            raise MoveError("k4minus-extension: uv must be an edge")
        w1, w2 = G.n, G.n + 1
        edges = (G.edges - {_norm_edge(u, v)}) | {
            (u, w1), (u, w2), (v, w1), (v, w2), (w1, w2)
        }
        return Graph.from_edges(G.n + 2, edges), None

    if kind == "k4minus-reduction":
        u1, u2 = p
        if not G.has_edge(u1, u2):
            raise MoveError("k4minus-reduction: u1u2 must be an edge")
        if G.degree(u1) != 3 or G.degree(u2) != 3:
            raise MoveError("k4minus-reduction: u1 and u2 must have degree 3")
        common = sorted((G.adj[u1] & G.adj[u2]) - {u1, u2})
        if len(common) != 2:
            raise MoveError("k4minus-reduction: |N(u1) ∩ N(u2)| must be 2")
        v1, v2 = common
        if G.has_edge(v1, v2):
            raise MoveError("k4minus-reduction: completing edge already present")
        H, relabel = G.remove_vertices([u1, u2])
        return H.add_edge(relabel[v1], relabel[v2]), relabel

    if kind == "generalized-vertex-split":
        v, x = p[0], p[1]
        n2 = set(p[2:])
        if not n2 <= G.adj[v]:
            raise MoveError("generalized-vertex-split: n2 must be neighbours of v")
        n1 = G.adj[v] - n2
        if x == v or not 0 <= x < G.n:
            raise MoveError("generalized-vertex-split: x must be another existing vertex")
        if x in n1:
            raise MoveError("generalized-vertex-split: x must avoid the part kept at v")
        v2 = G.n
        edges = set(G.edges)
        for w in n2:
            edges.discard(_norm_edge(v, w))
            edges.add((w, v2) if w < v2 else (v2, w))
        edges.add((v, v2))
        edges.add(_norm_edge(v, x))
        return Graph.from_edges(G.n + 1, edges), None

    if kind == "edge-reduction":
        a, b, c = p
        if not G.has_edge(a, b):
            raise MoveError("edge-reduction: ab must be an edge")
        if c not in G.adj[a] or c == b:
            raise MoveError("edge-reduction: c must be a neighbour of a other than b")
        common = (G.adj[a] & G.adj[b]) - {a, b}
        if not common <= {c}:
            raise MoveError("edge-reduction: a and b may share no neighbour besides c")
        edges = set(G.edges) - {_norm_edge(a, b), _norm_edge(a, c)}
        moved = set()
        for e in edges:
            if b in e:
                other = e[0] if e[1] == b else e[1]
                moved.add((e, _norm_edge(a, other)))
        for old, new in moved:
            edges.discard(old)
            edges.add(new)
        H0 = Graph.from_edges(G.n, edges)
        H, relabel = H0.remove_vertices([b])
        return H, relabel

    raise MoveError(f"unknown move kind {kind!r}")


def apply(G: Graph, move: Move) -> Graph:
    """Apply a move, with deterministic relabeling on vertex deletions."""
    return _apply_full(G, move)[0]


def inverse(G: Graph, move: Move) -> Move:
    """The move that undoes `move` when applied to apply(G, move).

    Round trips land on a graph isomorphic to G (labels may shift when the
    forward move deleted vertices).
    """
    kind, p = move.kind, move.params
    if kind == "edge-addition":
        return Move("edge-deletion", p)
    if kind == "edge-deletion":
        return Move("edge-addition", p)
    if kind == "1-extension":
        x, y, _ = p
        return Move("1-reduction", (G.n, x, y))
    if kind == "1-reduction":
        v, x, y = p
        _, relabel = _apply_full(G, move)
        z = next(w for w in G.adj[v] if w not in (x, y))
        return Move("1-extension", (relabel[x], relabel[y], relabel[z]))
    if kind == "k4minus-extension":
        return Move("k4minus-reduction", (G.n, G.n + 1))
    if kind == "k4minus-reduction":
        u1, u2 = p
        _, relabel = _apply_full(G, move)
        v1, v2 = sorted((G.adj[u1] & G.adj[u2]) - {u1, u2})
        return Move("k4minus-extension", (relabel[v1], relabel[v2]))
    if kind == "generalized-vertex-split":
        v, x = p[0], p[1]
        return Move("edge-reduction", (v, G.n, x))
    if kind == "edge-reduction":
        a, b, c = p
        _, relabel = _apply_full(G, move)
        n2 = sorted(relabel[w] for w in G.adj[b] if w != a)
        return Move("generalized-vertex-split", (relabel[a], relabel[c], *n2))
    raise MoveError(f"unknown move kind {kind!r}")


# ---------------------------------------------------------------------------
# joins and separations


def join(G1: Graph, G2: Graph, j: int, gluing) -> Graph:
    """Glue two graphs across a shared edge, K4 pair, or degree-3 vertices.

    gluing by j:
      1: ((a1, b1), (a2, b2, c2, d2))   edge of G1, K4 of G2 with deg-3 c2, d2;
                                        a1 is identified with a2 and b1 with b2
      2: ((a1, b1, c1, d1), (a2, b2, c2, d2))   K4 of each side, deg-3 c_i, d_i
      3: ((v1, (a1, b1, c1)), (v2, (a2, b2, c2)))  degree-3 vertices, paired
                                        neighbours a1-a2, b1-b2, c1-c2
    """
    if j == 1:
        (a1, b1), (a2, b2, c2, d2) = gluing
        if not G1.has_edge(a1, b1):
            raise MoveError("1-join: a1b1 must be an edge of G1")
        _require_k4(G2, (a2, b2, c2, d2), "1-join")
        if G2.degree(c2) != 3 or G2.degree(d2) != 3:
            raise MoveError("1-join: c and d must have degree 3 in G2")
        keep2 = [v for v in range(G2.n) if v not in (a2, b2, c2, d2)]
        lab2 = {v: G1.n + i for i, v in enumerate(keep2)}
        lab2[a2], lab2[b2] = a1, b1
        f2 = set(_all_pairs((a2, b2, c2, d2)))
        edges = set(G1.edges) - {_norm_edge(a1, b1)}
        edges |= {
            _norm_edge(lab2[u], lab2[v]) for u, v in G2.edges if (u, v) not in f2
        }
        return Graph.from_edges(G1.n + len(keep2), edges)

    if j == 2:
        (a1, b1, c1, d1), (a2, b2, c2, d2) = gluing
        _require_k4(G1, (a1, b1, c1, d1), "2-join")
        _require_k4(G2, (a2, b2, c2, d2), "2-join")
        for H, (c, d), name in ((G1, (c1, d1), "G1"), (G2, (c2, d2), "G2")):
            if H.degree(c) != 3 or H.degree(d) != 3:
                raise MoveError(f"2-join: c and d must have degree 3 in {name}")
        keep1 = [v for v in range(G1.n) if v not in (c1, d1)]
        lab1 = {v: i for i, v in enumerate(keep1)}
        keep2 = [v for v in range(G2.n) if v not in (a2, b2, c2, d2)]
        lab2 = {v: len(keep1) + i for i, v in enumerate(keep2)}
        lab2[a2], lab2[b2] = lab1[a1], lab1[b1]
        f1 = set(_all_pairs((a1, b1, c1, d1)))
        f2 = set(_all_pairs((a2, b2, c2, d2)))
        edges = {
            _norm_edge(lab1[u], lab1[v]) for u, v in G1.edges if (u, v) not in f1
        }
        edges |= {
            _norm_edge(lab2[u], lab2[v]) for u, v in G2.edges if (u, v) not in f2
        }
        edges.add(_norm_edge(lab1[a1], lab1[b1]))
        return Graph.from_edges(len(keep1) + len(keep2), edges)

    if j == 3:
        (v1, (a1, b1, c1)), (v2, (a2, b2, c2)) = gluing
        for H, v, nbrs, name in (
            (G1, v1, (a1, b1, c1), "G1"),
            (G2, v2, (a2, b2, c2), "G2"),
        ):
            if H.adj[v] != frozenset(nbrs):
                raise MoveError(f"3-join: v must have exactly those neighbours in {name}")
        keep1 = [v for v in range(G1.n) if v != v1]
        lab1 = {v: i for i, v in enumerate(keep1)}
        keep2 = [v for v in range(G2.n) if v != v2]
        lab2 = {v: len(keep1) + i for i, v in enumerate(keep2)}
        edges = {
            _norm_edge(lab1[u], lab1[w]) for u, w in G1.edges if v1 not in (u, w)
        }
        edges |= {
            _norm_edge(lab2[u], lab2[w]) for u, w in G2.edges if v2 not in (u, w)
        }
        edges |= {
            _norm_edge(lab1[a1], lab2[a2]),
            _norm_edge(lab1[b1], lab2[b2]),
            _norm_edge(lab1[c1], lab2[c2]),
        }
        return Graph.from_edges(len(keep1) + len(keep2), edges)

    raise MoveError("j must be 1, 2 or 3")


def _all_pairs(vs):
    out = []
    for i in range(len(vs)):
        for k in range(i + 1, len(vs)):
            out.append(_norm_edge(vs[i], vs[k]))
    return out


def _require_k4(G: Graph, vs, ctx: str):
    if len(set(vs)) != 4 or any(not 0 <= v < G.n for v in vs):
        raise MoveError(f"{ctx}: need four distinct vertices")
    if len(G.induced_edges(vs)) != 6:
        raise MoveError(f"{ctx}: the four vertices must induce a K4")


def separations_of(G: Graph, j: int) -> list[tuple[Graph, Graph]]:
    """All j-separations of G, as pairs of completed (relabeled) graphs.

    For j = 1 both orderings of each underlying 2-vertex-separation are
    produced, since the K4 completion is attached to the second part only.
    j = 2 and j = 3 are symmetric and each underlying separation appears
    once.
    """
    out = []
    if j in (1, 2):
        for sep in enumerate_separations(G, "vertex-cut-2"):
            a, b = sep.cut
            has_ab = G.has_edge(a, b)
            if (j == 1 and has_ab) or (j == 2 and not has_ab):
                continue
            p1, p2 = sep.parts
            if j == 1:
                out.append(_one_separation(G, p1, p2, a, b))
                out.append(_one_separation(G, p2, p1, a, b))
            else:
                out.append(_two_separation(G, p1, p2, a, b))
    elif j == 3:
        for sep in enumerate_separations(G, "edge-cut-3"):
            if not sep.nontrivial:
                continue
            out.append(_three_separation(G, sep))
    else:
        raise MoveError("j must be 1, 2 or 3")
    return out


def _one_separation(G, p1, p2, a, b):
    H1, lab1 = G.subgraph(p1.vertices)
    G1 = H1.add_edge(lab1[a], lab1[b])
    H2, lab2 = G.subgraph(p2.vertices)
    c, d = H2.n, H2.n + 1
    edges = set(H2.edges) | {
        (lab2[a], lab2[b]), (lab2[a], c), (lab2[a], d),
        (lab2[b], c), (lab2[b], d), (c, d),
    }
    G2 = Graph.from_edges(H2.n + 2, {_norm_edge(u, v) for u, v in edges})
    return G1, G2


def _two_separation(G, p1, p2, a, b):
    def complete(part):
        H, lab = G.subgraph(part.vertices)
        c, d = H.n, H.n + 1
        edges = set(H.edges) | {
            (lab[a], c), (lab[a], d), (lab[b], c), (lab[b], d), (c, d),
        }
        return Graph.from_edges(H.n + 2, {_norm_edge(u, v) for u, v in edges})

    return complete(p1), complete(p2)


def _three_separation(G, sep):
    p1, p2 = sep.parts

    def complete(part):
        H, lab = G.subgraph(part.vertices)
        apex = H.n
        ends = [
            e[0] if e[0] in set(part.vertices) else e[1] for e in sep.cut
        ]
        edges = set(H.edges) | {(lab[x], apex) for x in ends}
        return Graph.from_edges(H.n + 1, {_norm_edge(u, v) for u, v in edges})

    return complete(p1), complete(p2)


# ---------------------------------------------------------------------------
# the reduction engine


@dataclass(frozen=True)
class TraceStep:
    move: Move
    result_hash: str
    relabel: tuple[tuple[int, int], ...] | None
    result: Graph


@dataclass
class ReductionTrace:
    """Record of a reduction down to K5- or B1.

    Replaying the forward script (the inverse moves, conjugated into the
    rebuild's label space) from the named base rebuilds a graph isomorphic
    to the input; see forward_script().
    """

    start: Graph
    base: str = ""
    steps: list[TraceStep] = field(default_factory=list)

    @property
    def final(self) -> Graph:
        return self.steps[-1].result if self.steps else self.start

    def graph_before(self, i: int) -> Graph:
        return self.start if i == 0 else self.steps[i - 1].result

    def forward_script(self) -> list[Move]:
        """Construction moves that rebuild the input from the base graph.

        Reduction moves renumber vertices, so the raw inverses of the steps
        do not compose across the canonical base's labeling.  This walks the
        trace backwards keeping a map from each intermediate graph's labels
        into the rebuild's labels and rewrites every inverse move through
        it.
        """
        from .graphs import find_isomorphism

        base = base_graph(self.base)
        sigma = find_isomorphism(self.final, base)
        if sigma is None:
            raise MoveError("trace does not end at its base graph")
        n_re = base.n
        out = []
        for i in range(len(self.steps) - 1, -1, -1):
            step = self.steps[i]
            prev = self.graph_before(i)
            m = step.move
            rel = dict(step.relabel) if step.relabel else {
                v: v for v in range(prev.n)
            }
            if m.kind == "edge-deletion":
                u, v = m.params
                out.append(Move("edge-addition",
                                tuple(sorted((sigma[u], sigma[v])))))
            elif m.kind == "k4minus-reduction":
                u1, u2 = m.params
                v1, v2 = sorted((prev.adj[u1] & prev.adj[u2]) - {u1, u2})
                out.append(Move("k4minus-extension",
                                (sigma[rel[v1]], sigma[rel[v2]])))
                sigma = {w: sigma[rel[w]] for w in rel}
                sigma[u1], sigma[u2] = n_re, n_re + 1
                n_re += 2
            elif m.kind == "edge-reduction":
                a, b, c = m.params
                n2 = sorted(sigma[rel[w]] for w in prev.adj[b] if w != a)
                out.append(Move("generalized-vertex-split",
                                (sigma[rel[a]], sigma[rel[c]], *n2)))
                sigma = {w: sigma[rel[w]] for w in rel}
                sigma[b] = n_re
                n_re += 1
            elif m.kind == "1-reduction":
                v, x, y = m.params
                z = next(w for w in prev.adj[v] if w not in (x, y))
                out.append(Move("1-extension",
                                (sigma[rel[x]], sigma[rel[y]], sigma[rel[z]])))
                sigma = {w: sigma[rel[w]] for w in rel}
                sigma[v] = n_re
                n_re += 1
            else:
                raise MoveError(f"unexpected reduction kind {m.kind!r}")
        return out


_BASES = (("K5-", catalog.k5_minus()), ("B1", catalog.b1()))


def base_name_of(G: Graph) -> str | None:
    for name, B in _BASES:
        if is_isomorphic(G, B):
            return name
    return None


def base_graph(name: str) -> Graph:
    for base, B in _BASES:
        if base == name:
            return B
    raise MoveError(f"unknown base graph {name!r}")


def find_admissible_reduction(G: Graph) -> Move | None:
    """An edge-deletion, K4--reduction or edge-reduction keeping the graph
    M(2,2)-connected; None exactly on the base graphs.

    Candidates are tried in a fixed order (deletions, then K4--reductions,
    then edge-reductions, parameters sorted) so reductions are reproducible.
    Cheap degree filters run before the full connectivity check.
    """
    if not is_m22_connected(G):
        raise MoveError("input is not M(2,2)-connected")
    if base_name_of(G) is not None:
        return None

    edges = G.sorted_edges()

    if G.m >= 2 * G.n:  # a deletion can only survive with |E|-1 >= 2n-1
        for u, v in edges:
            if G.degree(u) < 4 or G.degree(v) < 4:
                continue
            if is_m22_connected(G.remove_edge(u, v)):
                return Move("edge-deletion", (u, v))

    for u1, u2 in edges:
        if G.degree(u1) != 3 or G.degree(u2) != 3:
            continue
        common = sorted((G.adj[u1] & G.adj[u2]) - {u1, u2})
        if len(common) != 2 or G.has_edge(*common):
            continue
        move = Move("k4minus-reduction", (u1, u2))
        if is_m22_connected(apply(G, move)):
            return move

    for u, v in edges:
        for a, b in ((u, v), (v, u)):
            common = (G.adj[a] & G.adj[b]) - {a, b}
            if len(common) > 1:
                continue
            if G.degree(a) + G.degree(b) - 3 < 3:
                continue
            cs = sorted(common) if common else sorted(G.adj[a] - {b})
            for c in cs:
                if G.degree(c) - 1 < 3:
                    continue
                move = Move("edge-reduction", (a, b, c))
                if is_m22_connected(apply(G, move)):
                    return move
    return None


def reduce_to_base(G: Graph) -> ReductionTrace:
    """Reduce an M(2,2)-connected graph to K5- or B1 move by move.

    Every intermediate graph is M(2,2)-connected; each move strictly
    decreases |V| + |E|, so the loop terminates.
    """
    trace = ReductionTrace(start=G)
    current = G
    name = base_name_of(current)
    if name is None and not is_m22_connected(current):
        raise MoveError("input is not M(2,2)-connected")
    while name is None:
        move = find_admissible_reduction(current)
        if move is None:
            raise MoveError("no admissible reduction found")  # cannot happen
        nxt, relabel = _apply_full(current, move)
        trace.steps.append(
            TraceStep(
                move=move,
                result_hash=graph_hash(nxt),
                relabel=tuple(sorted(relabel.items())) if relabel else None,
                result=nxt,
            )
        )
        current = nxt
        name = base_name_of(current)
    trace.base = name
    return trace


def rebuild_from_trace(trace: ReductionTrace) -> Graph:
    """Apply the trace's forward script starting at its base graph."""
    G = base_graph(trace.base)
    for move in trace.forward_script():
        G = apply(G, move)
    return G


# ---------------------------------------------------------------------------
# random generation


def random_m22_graph(steps: int, seed: int) -> Graph:
    """Grow a random M(2,2)-connected graph from K5- or B1.

    Edge additions, 1-extensions and K4--extensions always preserve
    connectivity of the matroid; vertex splits are re-rolled until the
    result passes, falling back to a K4--extension if none does.
    """
    if steps < 0:
        raise MoveError("steps must be non-negative")
    rng = random.Random(seed)
    G = catalog.k5_minus() if rng.random() < 0.5 else catalog.b1()
    for _ in range(steps):
        kind = rng.choices(
            ["edge-addition", "1-extension", "k4minus-extension",
             "generalized-vertex-split"],
            weights=[2, 3, 3, 3],
        )[0]
        if kind == "edge-addition":
            non_edges = [
                (u, v)
                for u in range(G.n)
                for v in range(u + 1, G.n)
                if not G.has_edge(u, v)
            ]
            if not non_edges:
                kind = "k4minus-extension"
            else:
                G = apply(G, Move("edge-addition", rng.choice(non_edges)))
                continue
        if kind == "1-extension":
            x, y = rng.choice(G.sorted_edges())
            z = rng.choice([w for w in range(G.n) if w not in (x, y)])
            G = apply(G, Move("1-extension", (x, y, z)))
        elif kind == "k4minus-extension":
            G = apply(G, Move("k4minus-extension", rng.choice(G.sorted_edges())))
        else:
            G = _random_split(G, rng)
    return G


def _random_split(G: Graph, rng: random.Random) -> Graph:
    for _ in range(40):
        v = rng.randrange(G.n)
        nbrs = sorted(G.adj[v])
        if len(nbrs) < 3:
            continue
        # both pieces must keep degree >= 3: |n2| >= 2 and |n1| >= 1
        size = rng.randint(2, len(nbrs) - 1)
        n2 = sorted(rng.sample(nbrs, size))
        n1 = set(nbrs) - set(n2)
        cands = [x for x in range(G.n) if x != v and x not in n1]
        if not cands:
            continue
        x = rng.choice(cands)
        H = apply(G, Move("generalized-vertex-split", (v, x, *n2)))
        if H.min_degree() >= 3 and is_m22_connected(H):
            return H
    return apply(G, Move("k4minus-extension", rng.choice(G.sorted_edges())))
