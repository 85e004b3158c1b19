"""lp-plane geometry: support functionals, the rigidity operator and its
rank, rigidity predicates, reflections and counterexample placements.

Exponents p with 1 < p < infinity keep the plane smooth and strictly
convex.  For even integer p and rational coordinates the row-scaled
operator has exact rational entries, so ranks can be certified by
fraction-free elimination; everything else falls back to numpy SVD with a
relative tolerance.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Edge, Graph

Coord = tuple  # (x, y) of Fractions or floats

# linear parts of the isometries of a non-Euclidean lp plane:
# the eight signed coordinate permutations
SIGNED_PERMUTATIONS = tuple(
    (sx * (1 - sw), sy * sw, sx * sw, sy * (1 - sw))  # row-major 2x2
    for sw in (0, 1)
    for sx in (1, -1)
    for sy in (1, -1)
)


@dataclass(frozen=True)
class NormedPlane:
    """An lp plane descriptor.

    trivial_flex_dim is 3 in the Euclidean case (translations and the
    infinitesimal rotation) and 2 otherwise (translations only; the linear
    isometry group of a non-Euclidean plane is finite).
    """

    p: float

    def __post_init__(self):
        if not self.p > 1:
            raise ValueError("need p > 1 (smooth and strictly convex)")

    @property
    def euclidean(self) -> bool:
        return self.p == 2

    @property
    def trivial_flex_dim(self) -> int:
        return 3 if self.euclidean else 2

    @property
    def exactable(self) -> bool:
        """Whether the scaled operator has exact rational entries."""
        return self.p == 2 or (self.p == int(self.p) and int(self.p) % 2 == 0)

    def isometry_linear_parts(self):
        if self.euclidean:
            raise ValueError("the Euclidean isometry group is not finite")
        return [((a, b), (c, d)) for a, b, c, d in SIGNED_PERMUTATIONS]

    def norm(self, x) -> float:
        return (abs(float(x[0])) ** self.p + abs(float(x[1])) ** self.p) ** (1 / self.p)


@dataclass(frozen=True)
class Placement:
    """Coordinates for the vertices 0..n-1, exact-rational or float."""

    coords: tuple[Coord, ...]

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def exact(self) -> bool:
        return all(
            isinstance(c, (Fraction, int)) for xy in self.coords for c in xy
        )

    def translated(self, dx, dy) -> "Placement":
        return Placement(tuple((x + dx, y + dy) for x, y in self.coords))

    def well_positioned(self, G: Graph) -> bool:
        return all(self.coords[u] != self.coords[v] for u, v in G.edges)


def support_functional(x, plane: NormedPlane):
    """The unique support functional of x: phi_x(x) = |x|^2, |phi_x|* = |x|.

    Componentwise sign(x_i) |x_i|^(p-1) / |x|^(p-2); the zero vector maps to
    the zero functional.  For p = 2 the functional is x itself (kept exact
    when x is rational).
    """
    if x[0] == 0 and x[1] == 0:
        return (0.0, 0.0)
    if plane.euclidean:
        return (x[0], x[1])
    p = plane.p
    nrm = plane.norm(x)
    return tuple(
        math.copysign(abs(float(c)) ** (p - 1), float(c)) / nrm ** (p - 2)
        for c in x
    )


@dataclass(frozen=True)
class RigidityOperator:
    """|E| x 2n matrix of support functionals of edge difference vectors.

    Row order is the sorted edge list.  For the row of edge (u, v) with
    u < v and d = p_v - p_u, the functional of d lands in v's columns and
    its negative in u's columns, so uniform translations are always in the
    kernel.  With `scaled` set, each row is multiplied by |d|^(p-2), turning
    the entries into d_i^(p-1); for even p and rational placements these
    are exact rationals.
    """

    matrix: tuple[tuple, ...]
    edges: tuple[Edge, ...]
    n: int
    scaled: bool

    @property
    def shape(self):
        return (len(self.matrix), 2 * self.n)

    def is_exact(self) -> bool:
        return all(
            isinstance(c, (Fraction, int)) for row in self.matrix for c in row
        )

    def as_array(self) -> np.ndarray:
        return np.array(
            [[float(c) for c in row] for row in self.matrix], dtype=float
        )

    def apply(self, vector):
        """Apply to a velocity assignment given as a flat length-2n vector."""
        return tuple(
            sum(row[i] * vector[i] for i in range(2 * self.n))
            for row in self.matrix
        )


def rigidity_operator(
    G: Graph, placement: Placement, plane: NormedPlane, scaled: bool = False
) -> RigidityOperator:
    if placement.n != G.n:
        raise ValueError("placement size does not match the graph")
    rows = []
    edges = tuple(G.sorted_edges())
    exact_ok = scaled and plane.exactable and placement.exact
    for u, v in edges:
        pu, pv = placement.coords[u], placement.coords[v]
        d = (pv[0] - pu[0], pv[1] - pu[1])
        if d == (0, 0) or (float(d[0]) == 0.0 and float(d[1]) == 0.0):
            raise ValueError(f"coincident endpoints on edge ({u},{v})")
        if exact_ok:
            q = int(plane.p) - 1
            phi = (Fraction(d[0]) ** q, Fraction(d[1]) ** q)
        else:
            phi = support_functional(d, plane)
            if scaled:
                s = plane.norm(d) ** (plane.p - 2)
                phi = (phi[0] * s, phi[1] * s)
        row = [0] * (2 * G.n)
        row[2 * u], row[2 * u + 1] = -phi[0], -phi[1]
        row[2 * v], row[2 * v + 1] = phi[0], phi[1]
        rows.append(tuple(row))
    return RigidityOperator(tuple(rows), edges, G.n, scaled)


# ---------------------------------------------------------------------------
# rank


def _bareiss_rank(rows) -> int:
    """Rank by fraction-free elimination over exact integers.

    Rows are scaled to integers first (positive row scalings preserve
    rank); all arithmetic stays in Python bigints.
    """
    mat = []
    for row in rows:
        fracs = [Fraction(c) for c in row]
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        mat.append([int(f * den) for f in fracs])
    m = len(mat)
    cols = len(mat[0]) if m else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, m) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(r + 1, m):
            for j in range(c + 1, cols):
                mat[i][j] = (mat[r][c] * mat[i][j] - mat[i][c] * mat[r][j]) // prev
            mat[i][c] = 0
        prev = mat[r][c]
        rank += 1
        r += 1
        if r == m:
            break
    return rank


def rank_of(op: RigidityOperator, mode: str = "exact", tol: float = 1e-9) -> int:
    """Rank of the operator; exact fraction-free elimination or SVD.

    Exact mode requires rational entries (p = 2, or the scaled operator for
    even integer p with a rational placement).  Float mode counts singular
    values above tol times the largest.
    """
    if not op.matrix:
        return 0
    if mode == "exact":
        if not op.is_exact():
            raise ValueError("exact rank needs rational entries; use float mode")
        return _bareiss_rank(op.matrix)
    if mode == "float":
        sv = np.linalg.svd(op.as_array(), compute_uv=False)
        if sv.size == 0 or sv[0] == 0.0:
            return 0
        return int(np.sum(sv > tol * sv[0]))
    raise ValueError(f"unknown rank mode {mode!r}")


def _auto_mode(op: RigidityOperator) -> str:
    return "exact" if op.is_exact() else "float"


def is_inf_rigid(
    G: Graph, placement: Placement, plane: NormedPlane,
    mode: str | None = None, tol: float = 1e-9,
) -> bool:
    """Rank test for infinitesimal rigidity: 2n-3 Euclidean, 2n-2 otherwise."""
    if G.n < 2:
        raise ValueError("needs at least two vertices")
    op = rigidity_operator(G, placement, plane, scaled=True)
    mode = mode or _auto_mode(op)
    return rank_of(op, mode, tol) == 2 * G.n - plane.trivial_flex_dim


def is_redundantly_rigid(
    G: Graph, placement: Placement, plane: NormedPlane,
    mode: str | None = None, tol: float = 1e-9,
) -> bool:
    """Whether every single-edge-deleted framework stays infinitesimally rigid."""
    if G.n < 2 or G.m < 1:
        raise ValueError("needs at least two vertices and one edge")
    target = 2 * G.n - plane.trivial_flex_dim
    op = rigidity_operator(G, placement, plane, scaled=True)
    mode = mode or _auto_mode(op)
    rows = op.matrix
    for i in range(len(rows)):
        sub = RigidityOperator(
            rows[:i] + rows[i + 1:], op.edges[:i] + op.edges[i + 1:], op.n, op.scaled
        )
        if rank_of(sub, mode, tol) != target:
            return False
    return True


def random_regular_placement(G: Graph, plane: NormedPlane, seed: int) -> Placement:
    """Random rational placement from a large grid.

    Numerators are drawn from [-10^6, 10^6] over a fixed denominator 10^3;
    the draw is rejected while any edge difference is axis-aligned (which
    would zero a scaled entry) or endpoints coincide.  Regularity holds
    almost surely and is certified downstream by rank agreement.
    """
    rng = random.Random(seed)
    for _ in range(200):
        coords = tuple(
            (
                Fraction(rng.randint(-10**6, 10**6), 1000),
                Fraction(rng.randint(-10**6, 10**6), 1000),
            )
            for _ in range(G.n)
        )
        ok = all(
            coords[u][0] != coords[v][0] and coords[u][1] != coords[v][1]
            for u, v in G.edges
        )
        if ok:
            return Placement(coords)
    raise RuntimeError("could not sample a well-positioned placement")


# ---------------------------------------------------------------------------
# reflections, counterexamples, congruence


def _circle_point(theta: float, r: float, plane: NormedPlane):
    ux, uy = math.cos(theta), math.sin(theta)
    s = r / plane.norm((ux, uy))
    return (ux * s, uy * s)


def z_reflection(z, x, plane: NormedPlane, tol: float = 1e-9):
    """The unique point y != x with |y| = |x| and |y - z| = |x - z|.

    Points on the line through 0 and z are fixed.  The root is bracketed on
    the arc of the norm circle on the far side of that line and found by
    sign bisection on the angular parameter, run to machine precision (an
    early residual stop would lose accuracy where the distance profile is
    flat).  The bracket is validated and a residual beyond tol raises.
    """
    zf = (float(z[0]), float(z[1]))
    xf = (float(x[0]), float(x[1]))
    if zf == (0.0, 0.0):
        raise ValueError("z must be non-zero")
    cross = zf[0] * xf[1] - zf[1] * xf[0]
    scale = max(plane.norm(zf) * plane.norm(xf), 1e-300)
    if abs(cross) <= 1e-14 * scale:
        return xf  # on the line: fixed point
    r = plane.norm(xf)
    target = plane.norm((xf[0] - zf[0], xf[1] - zf[1]))
    theta_z = math.atan2(zf[1], zf[0])
    sign = 1.0 if cross > 0 else -1.0
    # sweep the half-circle on the opposite side of the line from x
    lo, hi = 0.0, 1.0

    def dist(t):
        pt = _circle_point(theta_z - sign * t * math.pi, r, plane)
        return plane.norm((pt[0] - zf[0], pt[1] - zf[1])) - target

    flo, fhi = dist(lo), dist(hi)
    if not (flo < 0.0 < fhi):
        raise RuntimeError("z-reflection bracket failed; placement degenerate")
    for _ in range(110):
        mid = 0.5 * (lo + hi)
        if dist(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    if abs(dist(t)) > tol * max(1.0, target):
        raise RuntimeError("z-reflection did not converge")
    return _circle_point(theta_z - sign * t * math.pi, r, plane)


def cut_vertex_counterexample(
    G: Graph, placement: Placement, plane: NormedPlane
) -> Placement | None:
    """Negate one side of a cut vertex; the result is equivalent by symmetry.

    Returns None when G is 2-connected.  The placement is first translated
    so the cut vertex sits at the origin; x -> -x preserves all edge lengths
    within each side and through the cut vertex.
    """
    cut = None
    for u in range(G.n):
        rest = [v for v in range(G.n) if v != u]
        if len(rest) >= 2:
            H, _ = G.subgraph(rest)
            if not H.is_connected():
                cut = u
                break
    if cut is None:
        return None
    rest = [v for v in range(G.n) if v != cut]
    H, back = G.subgraph(rest)
    comps = H.components()
    inv = {new: old for old, new in back.items()}
    keep = {inv[v] for v in comps[0]} | {cut}
    px, py = placement.coords[cut]
    shifted = placement.translated(-px, -py)
    coords = tuple(
        (x, y) if v in keep else (-x, -y)
        for v, (x, y) in enumerate(shifted.coords)
    )
    return Placement(coords)


def framework_edge_lengths(G: Graph, placement: Placement, plane: NormedPlane):
    return {
        (u, v): plane.norm(
            (
                placement.coords[v][0] - placement.coords[u][0],
                placement.coords[v][1] - placement.coords[u][1],
            )
        )
        for u, v in G.sorted_edges()
    }


def equivalent_exactly(G: Graph, p: Placement, q: Placement, plane: NormedPlane) -> bool:
    """Edge-length equality; exact via p-th powers of coordinates when both
    placements are rational and p is an even integer (including p = 2),
    else within 1e-12 relative."""
    if p.exact and q.exact and plane.exactable:
        k = int(plane.p)
        for u, v in G.edges:
            du = (p.coords[v][0] - p.coords[u][0], p.coords[v][1] - p.coords[u][1])
            dv = (q.coords[v][0] - q.coords[u][0], q.coords[v][1] - q.coords[u][1])
            if abs(du[0]) ** k + abs(du[1]) ** k != abs(dv[0]) ** k + abs(dv[1]) ** k:
                return False
        return True
    lp = framework_edge_lengths(G, p, plane)
    lq = framework_edge_lengths(G, q, plane)
    return all(
        abs(lp[e] - lq[e]) <= 1e-12 * max(1.0, abs(lp[e])) for e in lp
    )


def is_congruent(
    p: Placement, q: Placement, plane: NormedPlane, tol: float = 1e-9
) -> bool:
    """Whether an isometry of the plane maps p onto q.

    Non-Euclidean planes: try each signed coordinate permutation with the
    translation pinned by the first vertex (exact when both placements are
    rational).  Euclidean: best-fit rotation or reflection plus translation,
    a documented heuristic with residual threshold tol.
    """
    if p.n != q.n:
        raise ValueError("placements must cover the same vertex set")
    if p.n == 0:
        return True
    if not plane.euclidean:
        exact = p.exact and q.exact
        for (a, b), (c, d) in plane.isometry_linear_parts():
            x0, y0 = p.coords[0]
            tx = q.coords[0][0] - (a * x0 + b * y0)
            ty = q.coords[0][1] - (c * x0 + d * y0)
            if exact:
                good = all(
                    (a * x + b * y + tx, c * x + d * y + ty) == q.coords[v]
                    for v, (x, y) in enumerate(p.coords)
                )
            else:
                good = all(
                    abs(float(a * x + b * y + tx) - float(q.coords[v][0])) <= tol
                    and abs(float(c * x + d * y + ty) - float(q.coords[v][1])) <= tol
                    for v, (x, y) in enumerate(p.coords)
                )
            if good:
                return True
        return False
    # Euclidean: orthogonal Procrustes over the rotation and reflection cosets
    P = np.array([[float(x), float(y)] for x, y in p.coords])
    Q = np.array([[float(x), float(y)] for x, y in q.coords])
    Pc = P - P.mean(axis=0)
    Qc = Q - Q.mean(axis=0)
    scale = max(1.0, float(np.abs(Qc).max()))
    for reflect in (False, True):
        Pr = Pc.copy()
        if reflect:
            Pr[:, 1] = -Pr[:, 1]
        M = Qc.T @ Pr
        U, _, Vt = np.linalg.svd(M)
        R = U @ Vt
        if np.linalg.det(R) < 0:
            U[:, -1] = -U[:, -1]
            R = U @ Vt
        if float(np.abs(Pr @ R.T - Qc).max()) <= tol * scale:
            return True
    return False
