"""Serialization: graph6 and edge-list graphs, placement files, move scripts.

graph6 follows the standard 63-offset byte encoding (upper triangle read
columnwise, six bits per byte); the long form for 63 <= n <= 258047 is
supported on both ends.  Edge lists are `n` on the first line then `u v`
lines.  Placements are one `v x y` line per vertex with rational `num/den`
or decimal coordinates.  Move scripts are a `base K5-|B1` header followed
by one `kind i j [k ...]` line per move.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import Placement
from .graphs import Graph
from .moves import KINDS, Move


class FormatError(ValueError):
    """Malformed input; the message carries the position."""


# ---------------------------------------------------------------------------
# graph6


def _g6_size_bytes(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    raise FormatError("graph6: vertex count too large")


def emit_graph6(G: Graph) -> str:
    out = _g6_size_bytes(G.n)
    bits = []
    for v in range(1, G.n):
        for u in range(v):
            bits.append(1 if G.has_edge(u, v) else 0)
    for i in range(0, len(bits), 6):
        chunk = bits[i:i + 6] + [0] * (6 - len(bits[i:i + 6]))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(val + 63)
    return "".join(chr(c) for c in out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("graph6: empty input")
    data = [ord(ch) - 63 for ch in s]
    for pos, val in enumerate(data):
        if not 0 <= val <= 63:
            raise FormatError(f"graph6: invalid byte at position {pos}")
    if data[0] == 63:
        if len(data) < 4:
            raise FormatError("graph6: truncated long-form size")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise FormatError(
            f"graph6: expected {need} data bytes for n={n}, got {len(body)}"
        )
    bits = []
    for val in body[:need]:
        for k in range(5, -1, -1):
            bits.append(val >> k & 1)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# edge lists


def emit_edgelist(G: Graph) -> str:
    lines = [str(G.n)]
    lines += [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    lines = [ln for ln in text.splitlines()]
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise FormatError("edgelist: empty input")
    try:
        n = int(lines[idx].strip())
    except ValueError:
        raise FormatError(f"edgelist: line {idx + 1}: expected vertex count")
    edges = []
    for ln_no in range(idx + 1, len(lines)):
        raw = lines[ln_no].strip()
        if not raw or raw.startswith("#"):
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise FormatError(f"edgelist: line {ln_no + 1}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"edgelist: line {ln_no + 1}: non-integer endpoint")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"edgelist: line {ln_no + 1}: bad edge ({u},{v})")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def parse_graph(text: str, format: str = "auto") -> Graph:
    if format == "graph6":
        return parse_graph6(text)
    if format == "edgelist":
        return parse_edgelist(text)
    if format == "auto":
        s = text.strip()
        if s and (s.splitlines()[0].strip().isdigit()):
            return parse_edgelist(text)
        return parse_graph6(text)
    raise FormatError(f"unknown graph format {format!r}")


def emit_graph(G: Graph, format: str = "edgelist") -> str:
    if format == "graph6":
        return emit_graph6(G) + "\n"
    if format == "edgelist":
        return emit_edgelist(G)
    raise FormatError(f"unknown graph format {format!r}")


# ---------------------------------------------------------------------------
# placements


def _frac_text(c) -> str:
    f = Fraction(c)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def emit_placement(pl: Placement) -> str:
    lines = []
    for v, (x, y) in enumerate(pl.coords):
        if isinstance(x, (Fraction, int)) and isinstance(y, (Fraction, int)):
            lines.append(f"{v} {_frac_text(x)} {_frac_text(y)}")
        else:
            lines.append(f"{v} {float(x)!r} {float(y)!r}")
    return "\n".join(lines) + "\n"


def _parse_coord(tok: str, where: str):
    if "/" in tok:
        num, _, den = tok.partition("/")
        try:
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"{where}: bad rational {tok!r}")
    try:
        if "." in tok or "e" in tok or "E" in tok:
            return float(tok)
        return Fraction(int(tok))
    except ValueError:
        raise FormatError(f"{where}: bad coordinate {tok!r}")


def parse_placement(text: str) -> Placement:
    entries = {}
    for ln_no, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 3:
            raise FormatError(f"placement: line {ln_no}: expected 'v x y'")
        try:
            v = int(parts[0])
        except ValueError:
            raise FormatError(f"placement: line {ln_no}: bad vertex {parts[0]!r}")
        x = _parse_coord(parts[1], f"placement: line {ln_no}")
        y = _parse_coord(parts[2], f"placement: line {ln_no}")
        entries[v] = (x, y)
    if not entries or sorted(entries) != list(range(len(entries))):
        raise FormatError("placement: vertices must be exactly 0..n-1")
    return Placement(tuple(entries[v] for v in range(len(entries))))


# ---------------------------------------------------------------------------
# certificates


def edge_set_text(edges) -> str:
    """Sorted edge list on one line, the certificate wire format."""
    return " ".join(f"{u}-{v}" for u, v in sorted(edges))


def ear_decomposition_text(ed) -> str:
    """One line per ear circuit, each a sorted edge list."""
    lines = [
        f"ear.{i}: {edge_set_text(circ)}"
        for i, circ in enumerate(ed.circuits, start=1)
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# move scripts


@dataclass(frozen=True)
class MoveScript:
    """A base graph name and the forward moves that grow it."""

    base: str
    moves: tuple[Move, ...]


def emit_move_script(script: MoveScript) -> str:
    lines = [f"base {script.base}"]
    for mv in script.moves:
        lines.append(mv.kind + "".join(f" {x}" for x in mv.params))
    return "\n".join(lines) + "\n"


def parse_move_script(text: str) -> MoveScript:
    base = None
    moves = []
    for ln_no, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if base is None:
            if parts[0] != "base" or len(parts) != 2:
                raise FormatError(f"script: line {ln_no}: expected 'base K5-|B1'")
            if parts[1] not in ("K5-", "B1"):
                raise FormatError(f"script: line {ln_no}: unknown base {parts[1]!r}")
            base = parts[1]
            continue
        kind = parts[0]
        if kind not in KINDS:
            raise FormatError(f"script: line {ln_no}: unknown move kind {kind!r}")
        try:
            params = tuple(int(x) for x in parts[1:])
        except ValueError:
            raise FormatError(f"script: line {ln_no}: non-integer parameter")
        moves.append(Move(kind, params))
    if base is None:
        raise FormatError("script: missing 'base' header")
    return MoveScript(base, tuple(moves))
