"""Decision procedures for global rigidity in analytic normed planes,
Euclidean comparison checkers, sufficient conditions that follow from the
main characterisation, and the numeric cross-validation harness.

The headline decision: a graph on at least five vertices is globally rigid
in every analytic normed plane iff it is 2-connected and M(2,2)-connected.
No graph on fewer than five vertices qualifies, the smallest circuit of the
matroid being K5-.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import (
    NormedPlane,
    Placement,
    random_regular_placement,
    rank_of,
    rigidity_operator,
)
from .graphs import (
    Edge,
    Graph,
    edge_connectivity,
    is_edge_transitive,
    is_k_connected,
    is_vertex_transitive,
)
from .sparsity import (
    EarDecomposition,
    ear_decomposition,
    is_m22_connected,
    m22_components,
    rank2k,
)

TRANSITIVITY_CAP = 12  # brute-force automorphism search beyond this is skipped


@dataclass
class NumericAgreement:
    p: float
    seed: int
    mode: str
    rank: int
    target: int
    edge_ranks: dict[Edge, int]
    inf_rigid_numeric: bool
    redundant_numeric: bool
    matches_combinatorial: bool


@dataclass
class RigidityReport:
    globally_rigid_analytic: bool
    two_connected: bool
    m22_connected: bool
    reasons: dict = field(default_factory=dict)
    sufficient_conditions_hit: list[str] = field(default_factory=list)
    euclidean_verdict: bool = False
    numeric_agreement: NumericAgreement | None = None
    notices: list[str] = field(default_factory=list)
    ear_certificate: EarDecomposition | None = None

    def to_text(self) -> str:
        lines = [
            f"globally_rigid_analytic: {_yn(self.globally_rigid_analytic)}",
            f"two_connected: {_yn(self.two_connected)}",
            f"m22_connected: {_yn(self.m22_connected)}",
        ]
        for key in sorted(self.reasons):
            lines.append(f"reason.{key}: {self.reasons[key]}")
        lines.append(
            "sufficient_conditions: "
            + (" ".join(self.sufficient_conditions_hit) or "none")
        )
        lines.append(f"euclidean_verdict: {_yn(self.euclidean_verdict)}")
        for note in self.notices:
            lines.append(f"notice: {note}")
        if self.numeric_agreement is not None:
            na = self.numeric_agreement
            lines.append(f"numeric.plane_p: {na.p:g}")
            lines.append(f"numeric.seed: {na.seed}")
            lines.append(f"numeric.mode: {na.mode}")
            lines.append(f"numeric.rank: {na.rank}/{na.target}")
            lines.append(f"numeric.inf_rigid: {_yn(na.inf_rigid_numeric)}")
            lines.append(f"numeric.redundant: {_yn(na.redundant_numeric)}")
            lines.append(
                f"numeric.matches_combinatorial: {_yn(na.matches_combinatorial)}"
            )
        return "\n".join(lines)


def _yn(b: bool) -> str:
    return "true" if b else "false"


def _first_cut_vertex(G: Graph):
    for u in range(G.n):
        rest = [v for v in range(G.n) if v != u]
        if len(rest) >= 2:
            H, _ = G.subgraph(rest)
            if not H.is_connected():
                return u
    return None


def _circuit_free_edge(G: Graph):
    for comp in m22_components(G):
        if len(comp) == 1:
            return next(iter(comp))
    return None


def is_globally_rigid_analytic(G: Graph) -> RigidityReport:
    """The combinatorial decision with certificates attached.

    True iff 2-connected and M(2,2)-connected; the report carries either an
    ear decomposition (connectivity certificate for the matroid) or a
    witness for failure (cut vertex / an edge in no circuit).
    """
    if G.n < 2:
        raise ValueError("decision defined for graphs on at least 2 vertices")
    report = RigidityReport(
        globally_rigid_analytic=False,
        two_connected=is_k_connected(G, 2),
        m22_connected=False,
    )
    if G.n < 5:
        report.m22_connected = False
        report.reasons["small_graph"] = (
            "fewer than 5 vertices; the smallest M(2,2)-connected graph is K5-"
        )
        report.euclidean_verdict = is_globally_rigid_euclidean(G)
        report.sufficient_conditions_hit = []
        return report
    report.m22_connected = is_m22_connected(G)
    report.globally_rigid_analytic = report.two_connected and report.m22_connected
    if not report.two_connected:
        cut = _first_cut_vertex(G)
        report.reasons["cut_vertex"] = (
            str(cut) if cut is not None else "disconnected"
        )
    if report.m22_connected:
        ed = ear_decomposition(G)
        if ed is not None:
            report.reasons["ear_decomposition"] = _ears_text(ed)
            report.ear_certificate = ed
    else:
        if G.min_degree() == 0 or G.m < 2:
            report.reasons["degenerate"] = "isolated vertex or fewer than 2 edges"
        else:
            e = _circuit_free_edge(G)
            if e is not None:
                report.reasons["edge_in_no_circuit"] = f"{e[0]}-{e[1]}"
            else:
                report.reasons["matroid_disconnected"] = (
                    f"{len(m22_components(G))} components"
                )
    report.sufficient_conditions_hit, notes = sufficient_checks(G)
    report.notices.extend(notes)
    report.euclidean_verdict = is_globally_rigid_euclidean(G)
    return report


def _ears_text(ed: EarDecomposition) -> str:
    sizes = ",".join(str(len(c)) for c in ed.circuits)
    new = ",".join(str(len(p)) for p in ed.new_parts())
    return f"t={ed.t} circuit_sizes=[{sizes}] new_edges=[{new}]"


# ---------------------------------------------------------------------------
# necessary conditions, separately


@dataclass
class HendricksonReport:
    two_connected: bool
    spanning_tight: bool
    every_edge_redundant: bool

    @property
    def passes(self) -> bool:
        return self.two_connected and self.spanning_tight and self.every_edge_redundant


def hendrickson_check(G: Graph) -> HendricksonReport:
    """The two necessary conditions, evaluated independently.

    Redundancy here is purely rank-based: a spanning (2,2)-tight subgraph
    must exist and no edge may be a coloop of the matroid, so a failure
    names which necessity broke without going through the component
    machinery.
    """
    if G.n < 2:
        raise ValueError("needs at least 2 vertices")
    two_conn = is_k_connected(G, 2)
    edges = G.sorted_edges()
    r = rank2k(edges, 2)
    spanning = r == 2 * G.n - 2 and G.m > 0
    every_edge = G.m > 0 and all(
        rank2k(edges[:i] + edges[i + 1:], 2) == r for i in range(G.m)
    )
    return HendricksonReport(two_conn, spanning, every_edge)


# ---------------------------------------------------------------------------
# sufficient conditions


def sufficient_checks(G: Graph) -> tuple[list[str], list[str]]:
    """Evaluate sufficient conditions for global rigidity.

    Returns (fired condition names, notices).  Every fired condition implies
    global rigidity in every analytic normed plane.  Transitivity detection
    is brute-force and capped at n <= 12; past the cap it is skipped with a
    notice rather than guessed.
    """
    fired: list[str] = []
    notes: list[str] = []
    if G.n < 3 or G.m == 0:
        return fired, notes
    degs = [G.degree(v) for v in range(G.n)]
    delta, Delta = min(degs), max(degs)
    two_conn = is_k_connected(G, 2)
    lam = edge_connectivity(G)

    if two_conn and lam >= 4:
        fired.append("edge_connectivity_4")
    if delta >= max(4, G.n / 2):
        fired.append("min_degree_half_order")
    if G.n >= 3 and all(
        rank2k(G.subgraph([w for w in range(G.n) if w != v])[0].edges, 2)
        == 2 * (G.n - 1) - 2
        for v in range(G.n)
    ):
        fired.append("vertex_deletion_rigid")
    if delta >= 4 and G.is_connected():
        if G.n <= TRANSITIVITY_CAP:
            if is_vertex_transitive(G) or is_edge_transitive(G):
                fired.append("vertex_or_edge_transitive")
        else:
            notes.append(
                f"transitivity check skipped (n > {TRANSITIVITY_CAP})"
            )
    # graph-or-complement window; fires only when the conclusion lands on G
    if delta >= 4 and Delta <= G.n - 5 and two_conn and lam >= 4:
        fired.append("complement_window")
    # spectral condition: algebraic connectivity above 4/(delta+1)
    if two_conn and delta >= 5:
        mu = _algebraic_connectivity(G)
        if mu > 4.0 / (delta + 1) + 1e-9:
            fired.append("spectral_gap")
    return fired, notes


def _algebraic_connectivity(G: Graph) -> float:
    L = np.zeros((G.n, G.n))
    for u, v in G.edges:
        L[u, u] += 1
        L[v, v] += 1
        L[u, v] -= 1
        L[v, u] -= 1
    eig = np.linalg.eigvalsh(L)
    return float(eig[1])


# ---------------------------------------------------------------------------
# Euclidean plane comparison


def is_globally_rigid_euclidean(G: Graph) -> bool:
    """Global rigidity in the Euclidean plane: complete on <= 3 vertices,
    or 3-connected and redundantly rigid in the (2,3) sense."""
    if G.n < 2:
        raise ValueError("needs at least 2 vertices")
    if G.n <= 3:
        return G.is_complete()
    if not is_k_connected(G, 3):
        return False
    edges = G.sorted_edges()
    target = 2 * G.n - 3
    if rank2k(edges, 3) != target:
        return False
    return all(
        rank2k(edges[:i] + edges[i + 1:], 3) == target for i in range(G.m)
    )


def euclidean_transfer(G: Graph) -> bool:
    """For an Euclidean-globally-rigid graph: analytic global rigidity holds
    iff |E| > 2|V| - 2, which the edge count decides outright."""
    if G.n < 2:
        raise ValueError("needs at least 2 vertices")
    if not is_globally_rigid_euclidean(G):
        raise ValueError("precondition: G must be globally rigid in the Euclidean plane")
    return G.m > 2 * G.n - 2


# ---------------------------------------------------------------------------
# numeric cross-validation


def certify(
    G: Graph, plane: NormedPlane, seed: int, placement: Placement | None = None
) -> RigidityReport:
    """Combinatorial decision plus rank checks at a random regular placement.

    Cross-validates: numeric infinitesimal rigidity against the spanning
    tight subgraph, and numeric redundant rigidity against every edge lying
    in a circuit plus the spanning tight subgraph.  A placement may be
    supplied; by default one is sampled from the seed.
    """
    report = is_globally_rigid_analytic(G)
    if placement is None:
        placement = random_regular_placement(G, plane, seed)
    op = rigidity_operator(G, placement, plane, scaled=True)
    mode = "exact" if op.is_exact() else "float"
    target = 2 * G.n - plane.trivial_flex_dim
    rank = rank_of(op, mode)
    edge_ranks = {}
    rows = op.matrix
    for i, e in enumerate(op.edges):
        sub_rows = rows[:i] + rows[i + 1:]
        sub = type(op)(sub_rows, op.edges[:i] + op.edges[i + 1:], op.n, op.scaled)
        edge_ranks[e] = rank_of(sub, mode)
    inf_rigid_num = rank == target
    redundant_num = all(r == target for r in edge_ranks.values())

    k = 3 if plane.euclidean else 2
    edges = G.sorted_edges()
    comb_rank = rank2k(edges, k)
    spanning_tight = comb_rank == 2 * G.n - k
    no_coloop = all(
        rank2k(edges[:i] + edges[i + 1:], k) == comb_rank for i in range(G.m)
    )
    agree = (inf_rigid_num == spanning_tight) and (
        redundant_num == (spanning_tight and no_coloop)
    )
    report.numeric_agreement = NumericAgreement(
        p=plane.p,
        seed=seed,
        mode=mode,
        rank=rank,
        target=target,
        edge_ranks=edge_ranks,
        inf_rigid_numeric=inf_rigid_num,
        redundant_numeric=redundant_num,
        matches_combinatorial=agree,
    )
    return report
