"""DIMACS-style graph files and cycle-notation generator output."""

from __future__ import annotations

from typing import Iterable

from .graph import ColoredGraph, GraphError, build_graph
from .perm import SparseAutomorphism


class DimacsError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def parse_dimacs(text: str) -> ColoredGraph:
    """Parse ``p edge n m`` / ``n v color`` / ``e u v`` lines (1-based vertices).

    ``c`` lines and blank lines are skipped.  Vertices without an ``n`` line
    get color 0.
    """
    n = None
    colors: list[int] = []
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    def vertex(tok: str, ln: int) -> int:
        try:
            v = int(tok)
        except ValueError:
            raise DimacsError(ln, f"bad vertex {tok!r}") from None
        if not 1 <= v <= n:
            raise DimacsError(ln, f"vertex {v} out of range 1..{n}")
        return v - 1

    for ln, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise DimacsError(ln, "second header")
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsError(ln, "malformed header, expected 'p edge <n> <m>'")
            try:
                n, _m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(ln, "malformed header counts") from None
            if n < 0 or _m < 0:
                raise DimacsError(ln, "negative header counts")
            colors = [0] * n
            continue
        if n is None:
            raise DimacsError(ln, "data before 'p edge' header")
        if kind == "n":
            if len(parts) != 3:
                raise DimacsError(ln, "expected 'n <vertex> <color>'")
            v = vertex(parts[1], ln)
            try:
                colors[v] = int(parts[2])
            except ValueError:
                raise DimacsError(ln, f"bad color {parts[2]!r}") from None
        elif kind == "e":
            if len(parts) != 3:
                raise DimacsError(ln, "expected 'e <u> <v>'")
            u, v = vertex(parts[1], ln), vertex(parts[2], ln)
            if u == v:
                raise DimacsError(ln, "self-loop")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DimacsError(ln, "duplicate edge")
            seen.add(key)
            edges.append(key)
        else:
            raise DimacsError(ln, f"unknown line type {kind!r}")
    if n is None:
        raise DimacsError(0, "missing 'p edge' header")
    try:
        return build_graph(n, edges, colors)
    except GraphError as e:  # pragma: no cover - checked above
        raise DimacsError(0, str(e)) from None


def write_dimacs(G: ColoredGraph, comments: Iterable[str] = ()) -> str:
    """Canonical text: header, nonzero colors by vertex, edges sorted."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {G.n} {G.m}")
    lines.extend(f"n {v + 1} {c}" for v, c in enumerate(G.colors) if c)
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def format_generator(phi: SparseAutomorphism, base: int = 1) -> str:
    cyc = phi.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(v + base) for v in c) + ")" for c in cyc)


def write_generators(gens: Iterable[SparseAutomorphism], base: int = 1) -> str:
    """One generator per line in disjoint-cycle notation."""
    return "".join(format_generator(g, base) + "\n" for g in gens)


def parse_generators(text: str, base: int = 1) -> list[SparseAutomorphism]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        cycles = []
        for chunk in line.split(")"):
            chunk = chunk.strip().lstrip("(")
            if chunk:
                cycles.append([int(t) - base for t in chunk.split()])
        out.append(SparseAutomorphism.from_cycles(cycles))
    return out
