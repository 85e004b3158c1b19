"""The simple (2,k)-sparse matroid for 0 <= k <= 3.

Rank and independence come from the standard pebble game: every vertex
starts with two pebbles, and an edge is accepted when k+1 pebbles can be
gathered on its endpoints by reversing directed paths.  On a rejected edge
the set of vertices reachable from the endpoints spans exactly the
fundamental circuit, which is what the component and ear-decomposition
machinery is built from.

The k = 2 case (rank2k(..., 2), circuits, M(2,2)-components, connectivity,
ear decompositions) is the one the rigidity theory uses; k = 3 serves the
Euclidean comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Edge, Graph, _norm_edge


class PebbleGame:
    """Mutable (2,k) pebble game state over vertices 0..n-1.

    Invariant: pebbles[v] + outdeg(v) == 2 for every vertex, so the total
    pebble count plus the number of accepted edges is 2n.  The accepted set
    is (2,k)-sparse at all times.
    """

    def __init__(self, n: int, k: int):
        if not 0 <= k <= 3:
            raise ValueError("k must be in 0..3")
        self.n = n
        self.k = k
        self.pebbles = [2] * n
        self.out: list[set[int]] = [set() for _ in range(n)]
        self.accepted: list[Edge] = []

    def _grab_pebble(self, root: int, keep: tuple[int, int]) -> bool:
        """Pull one pebble to `root` along a reversed directed path.

        Pebbles sitting on the two endpoints in `keep` are off limits; they
        are the ones being gathered.
        """
        parent = {root: None}
        stack = [root]
        target = None
        while stack:
            u = stack.pop()
            if u != root and u not in keep and self.pebbles[u] > 0:
                target = u
                break
            for w in self.out[u]:
                if w not in parent:
                    parent[w] = u
                    stack.append(w)
        if target is None:
            return False
        self.pebbles[target] -= 1
        v = target
        while parent[v] is not None:
            u = parent[v]
            self.out[u].remove(v)
            self.out[v].add(u)
            v = u
        self.pebbles[root] += 1
        return True

    def insert(self, u: int, v: int) -> bool:
        """Try to accept edge uv; return whether it stays independent."""
        if u == v:
            raise ValueError("loops are not allowed")
        need = self.k + 1
        while self.pebbles[u] + self.pebbles[v] < need:
            if not (self._grab_pebble(u, (u, v)) or self._grab_pebble(v, (u, v))):
                return False
        tail, head = (u, v) if self.pebbles[u] > 0 else (v, u)
        self.pebbles[tail] -= 1
        self.out[tail].add(head)
        self.accepted.append(_norm_edge(u, v))
        return True

    def reach(self, u: int, v: int) -> set[int]:
        seen = {u, v}
        stack = [u, v]
        while stack:
            x = stack.pop()
            for w in self.out[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def fundamental_circuit_of_rejected(self, u: int, v: int) -> frozenset[Edge]:
        """Circuit created by the edge uv that insert() just rejected.

        After a failed maximal pebble search the reachable region R is tight
        and carries exactly the circuit: the accepted edges induced on R
        plus uv.
        """
        region = self.reach(u, v)
        circ = {
            e for e in self.accepted if e[0] in region and e[1] in region
        }
        circ.add(_norm_edge(u, v))
        return frozenset(circ)

    @property
    def rank(self) -> int:
        return len(self.accepted)


def _run_game(edges, k: int) -> tuple[PebbleGame, list[Edge], list[Edge]]:
    """Play the game over the edges in the given order.

    Returns (state, accepted order, rejected order).  Vertex count is taken
    from the largest label seen.
    """
    edges = [_norm_edge(u, v) for u, v in edges]
    n = 1 + max((v for e in edges for v in e), default=-1)
    game = PebbleGame(max(n, 0), k)
    rejected = []
    for u, v in edges:
        if not game.insert(u, v):
            rejected.append((u, v))
    return game, list(game.accepted), rejected


def rank2k(edges, k: int) -> int:
    """Rank of an edge set in the (2,k)-sparsity matroid."""
    seen = set()
    uniq = []
    for u, v in edges:
        e = _norm_edge(u, v)
        if e not in seen:
            seen.add(e)
            uniq.append(e)
    game, _, _ = _run_game(uniq, k)
    return game.rank


def is_sparse(G: Graph, k: int) -> bool:
    """Every subgraph satisfies |E'| <= 2|V'| - k, i.e. E is independent."""
    if G.m < 1:
        raise ValueError("needs at least one edge")
    return rank2k(G.edges, k) == G.m


def is_tight(G: Graph, k: int) -> bool:
    return is_sparse(G, k) and G.m == 2 * G.n - k


def is_circuit22(G: Graph) -> bool:
    """Whether G is a circuit of the simple (2,2) matroid.

    Equivalent formulations: |E| = 2|V|-1 with every proper subgraph
    (2,2)-sparse, or G dependent with G-e independent for every edge.
    """
    if G.m < 1 or G.min_degree() == 0:
        raise ValueError("needs at least one edge and no isolated vertices")
    if G.m != 2 * G.n - 1:
        return False
    edges = G.sorted_edges()
    return all(rank2k(edges[:i] + edges[i + 1:], 2) == G.m - 1 for i in range(G.m))


def fundamental_circuit(base, e: Edge, k: int = 2) -> frozenset[Edge]:
    """The unique circuit inside base + e, given base independent.

    Raises if base is dependent or if base + e stays independent.
    """
    base = [_norm_edge(u, v) for u, v in base]
    e = _norm_edge(*e)
    n = 1 + max(max((v for d in base for v in d), default=-1), e[1])
    game = PebbleGame(n, k)
    for u, v in base:
        if not game.insert(u, v):
            raise ValueError("base edge set is not independent")
    if game.insert(*e):
        raise ValueError("base + e is independent; no circuit")
    return game.fundamental_circuit_of_rejected(*e)


# ---------------------------------------------------------------------------
# matroid components


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


def _component_pass(uf: _UnionFind, edges, k: int) -> bool:
    """One fundamental-circuit pass over edges in the given order."""
    n = 1 + max(v for e in edges for v in e)
    game = PebbleGame(n, k)
    merged = False
    for u, v in edges:
        if not game.insert(u, v):
            circ = list(game.fundamental_circuit_of_rejected(u, v))
            for f in circ[1:]:
                merged |= uf.union(circ[0], f)
    return merged


def m22_components(G: Graph) -> list[frozenset[Edge]]:
    """Partition of E into components of the (2,2) matroid.

    Edges sharing a circuit get merged via the fundamental circuits of one
    basis; passes with differently ordered bases repeat until no pass merges
    anything, guarding the single-basis characterisation.
    """
    if G.m < 1 or G.min_degree() == 0:
        raise ValueError("needs at least one edge and no isolated vertices")
    edges = G.sorted_edges()
    uf = _UnionFind(edges)
    orders = [edges, list(reversed(edges))]
    i = 0
    while True:
        order = orders[i % 2] if i < 2 else _rotated(edges, i)
        merged = _component_pass(uf, order, 2)
        i += 1
        if i >= 2 and not merged:
            break
    groups: dict[Edge, set[Edge]] = {}
    for e in edges:
        groups.setdefault(uf.find(e), set()).add(e)
    return sorted((frozenset(g) for g in groups.values()), key=sorted)


def _rotated(edges, i):
    j = i % len(edges)
    return edges[j:] + edges[:j]


def is_m22_connected(G: Graph) -> bool:
    """Every pair of edges lies in a common (2,2)-circuit.

    Requires no isolated vertices and at least two edges.  Cheap necessary
    filters (minimum degree 3, a spanning tight subgraph) run before the
    component computation since this sits on the reduction engine's hot
    path.
    """
    if G.n == 0 or G.m < 2 or G.min_degree() == 0:
        return False
    if G.min_degree() < 3:
        return False
    if G.m < 2 * G.n - 1:
        return False
    edges = G.sorted_edges()
    if rank2k(edges, 2) != 2 * G.n - 2:
        return False
    return len(m22_components(G)) == 1


# ---------------------------------------------------------------------------
# ear decompositions


@dataclass(frozen=True)
class EarDecomposition:
    """Ordered circuits C1..Ct with D_i = C1 ∪ ... ∪ C_i covering E.

    Each ear after the first meets the previous union (E1), adds new edges
    (E2), and its new-edge set is inclusion-minimal among circuits doing
    both (E3).
    """

    circuits: tuple[frozenset[Edge], ...]

    @property
    def t(self) -> int:
        return len(self.circuits)

    def unions(self) -> list[frozenset[Edge]]:
        out = []
        d: frozenset[Edge] = frozenset()
        for c in self.circuits:
            d = d | c
            out.append(d)
        return out

    def new_parts(self) -> list[frozenset[Edge]]:
        out = []
        d: set[Edge] = set()
        for c in self.circuits:
            out.append(frozenset(c - d))
            d |= c
        return out


def _split_basis(edges, dset, k: int):
    """Basis built with priority to the edges of dset.

    Returns (basis_of_d, basis_rest, rejected_rest, fundamental_circuits),
    the last mapping each rejected edge to its circuit w.r.t. the basis.
    """
    d_edges = sorted(e for e in edges if e in dset)
    rest = sorted(e for e in edges if e not in dset)
    n = 1 + max(v for e in edges for v in e)
    game = PebbleGame(n, k)
    bd = [e for e in d_edges if game.insert(*e)]
    bn, rej = [], []
    circuits = {}
    for e in rest:
        if game.insert(*e):
            bn.append(e)
        else:
            rej.append(e)
            circuits[e] = game.fundamental_circuit_of_rejected(*e)
    return bd, bn, rej, circuits


def _contraction_circuit(f, bn, bd, m_circuit, k: int):
    """The unique circuit of the contraction M/D inside basis-rest + f.

    m_circuit is the fundamental circuit of f w.r.t. the D-priority basis;
    the contraction circuit lives inside its part beyond D, which keeps the
    exchange tests few.
    """
    rank_d = len(bd)
    candidates = [e for e in bn if e in m_circuit]

    def n_rank(edge_set):
        return rank2k(list(bd) + list(edge_set), k) - rank_d

    full = n_rank(bn)
    members = [f]
    for e in candidates:
        trial = [x for x in bn if x != e] + [f]
        if n_rank(trial) == full:
            members.append(e)
    return frozenset(members)


def _unique_circuit(edge_set, k: int) -> frozenset[Edge]:
    """Circuit of a nullity-one edge set (exactly one insert fails)."""
    game, _, rejected = _run_game(sorted(edge_set), k)
    if len(rejected) != 1:
        raise RuntimeError("edge set does not have nullity one")
    return game.fundamental_circuit_of_rejected(*rejected[0])


def ear_decomposition(G: Graph) -> EarDecomposition | None:
    """An ear decomposition of the (2,2) matroid of G, or None.

    None is returned exactly when G is not M(2,2)-connected.  Each step
    picks, among the circuits of the contraction M/D_{i-1} realisable as a
    qualifying circuit, one with the fewest new edges (ties broken by the
    sorted edge list), which makes the output deterministic and gives the
    inclusion-minimality property (E3).
    """
    if G.n > 0 and G.min_degree() == 0:
        raise ValueError("no isolated vertices allowed")
    if G.m < 2:
        return None
    edges = G.sorted_edges()
    _, _, rejected = _run_game(edges, 2)
    if not rejected:
        return None  # independent: no circuits at all
    # first ear: fundamental circuit of the first edge rejected in order
    ears = [_first_circuit(edges)]
    covered = set(ears[0])
    all_edges = set(edges)
    while covered != all_edges:
        bd, bn, rej, m_circuits = _split_basis(edges, covered, 2)
        best = None
        for f in rej:
            kf = _contraction_circuit(f, bn, bd, m_circuits[f], 2)
            if rank2k(kf, 2) != len(kf):
                continue  # a circuit avoiding D; not a qualifying ear
            key = (len(kf), tuple(sorted(kf)))
            if best is None or key < best[0]:
                best = (key, kf)
        if best is None:
            return None  # matroid disconnected
        kf = best[1]
        circ = _unique_circuit(set(bd) | set(kf), 2)
        ears.append(circ)
        covered |= circ
    return EarDecomposition(tuple(ears))


def _first_circuit(edges) -> frozenset[Edge]:
    """Fundamental circuit of the first edge rejected in canonical order."""
    order = sorted(edges)
    n = 1 + max(v for e in order for v in e)
    game = PebbleGame(n, 2)
    for u, v in order:
        if not game.insert(u, v):
            return game.fundamental_circuit_of_rejected(u, v)
    raise ValueError("edge set is independent; no circuit")
