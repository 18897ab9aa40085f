"""Quotient graphs of equitable colorings and the passes built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import _ops
from ._edit import rebuild
from .graph import ColoredGraph, GraphError, VertexRenaming
from .lifting import RepresentationMap
from .refinement import Coloring


@dataclass(frozen=True)
class QuotientGraph:
    """Cells (id -> size) and nonzero weights ``(c1, c2) -> |N(v) ∩ c2|`` for ``v`` in ``c1``."""

    nodes: dict[int, int]
    weights: dict[tuple[int, int], int] = field(default_factory=dict)

    def weight(self, c1: int, c2: int) -> int:
        return self.weights.get((c1, c2), 0)


def rep_weights(G: ColoredGraph, pi: Coloring) -> dict[int, dict[int, int]]:
    """Weights read off one representative per cell (valid when ``pi`` is equitable)."""
    out: dict[int, dict[int, int]] = {}
    perm, cell_of, adj = pi.perm, pi.cell_of, G.adj
    work = 0
    for c in pi.cell_ids():
        row: dict[int, int] = {}
        nb = adj[perm[c]]
        work += 1 + len(nb)
        for u in nb:
            d = cell_of[u]
            row[d] = row.get(d, 0) + 1
        out[c] = row
    _ops.add("quotient", work)
    return out


def build_quotient(G: ColoredGraph, pi: Coloring) -> QuotientGraph:
    """Quotient graph of an equitable coloring; raises ``GraphError`` otherwise."""
    cell_of = pi.cell_of
    nodes: dict[int, int] = {}
    weights: dict[tuple[int, int], int] = {}
    for c in pi.cell_ids():
        nodes[c] = pi.cell_size[c]
        sig = None
        for v in pi.cell(c):
            row: dict[int, int] = {}
            for u in G.adj[v]:
                d = cell_of[u]
                row[d] = row.get(d, 0) + 1
            if sig is None:
                sig = row
            elif row != sig:
                raise GraphError(f"coloring is not equitable at cell {c}")
        for d, w in sig.items():
            weights[(c, d)] = w
    _ops.add("quotient", G.n + 2 * G.m)
    return QuotientGraph(nodes, weights)


def quotient_equal(Q1: QuotientGraph, Q2: QuotientGraph) -> bool:
    return Q1.nodes == Q2.nodes and Q1.weights == Q2.weights


def flip_edges(G: ColoredGraph, pi: Coloring, c1: int, c2: int) -> ColoredGraph:
    """Complement the edges between two distinct cells.

    Only allowed when this strictly lowers the number of edges between them.
    """
    if c1 == c2:
        raise GraphError("flips inside one cell are not supported")
    A, B = pi.cell(c1), pi.cell(c2)
    cell_of = pi.cell_of
    m12 = sum(1 for v in A for u in G.adj[v] if cell_of[u] == c2)
    if not len(A) * len(B) - m12 < m12:
        raise GraphError("flip would not reduce the edge count")
    return _flip_many(G, pi, [(c1, c2)])


def _flip_many(G: ColoredGraph, pi: Coloring, pairs: Sequence[tuple[int, int]]) -> ColoredGraph:
    cell_of = pi.cell_of
    partner: dict[int, set[int]] = {}
    for a, b in pairs:
        partner.setdefault(a, set()).add(b)
        partner.setdefault(b, set()).add(a)
    adj = [list(a) for a in G.adj]
    work = 0
    for c, others in partner.items():
        for v in pi.cell(c):
            nb = G.adj[v]
            keep = [u for u in nb if cell_of[u] not in others]
            present = {u for u in nb if cell_of[u] in others}
            for d in others:
                keep.extend(u for u in pi.cell(d) if u not in present)
            work += len(nb) + len(keep)
            keep.sort()
            adj[v] = keep
    _ops.add("flip", work)
    return ColoredGraph(adj, list(G.colors))


def flip_pairs(G: ColoredGraph, pi: Coloring, weights: dict[int, dict[int, int]] | None = None) -> list[tuple[int, int]]:
    """Cell pairs whose edge count exceeds half of a complete connection."""
    if weights is None:
        weights = rep_weights(G, pi)
    size = pi.cell_size
    out = []
    for c in sorted(weights):
        for d, w in sorted(weights[c].items()):
            if d > c:
                m12 = size[c] * w
                if size[c] * size[d] - m12 < m12:
                    out.append((c, d))
    return out


def flip_dense_pairs(G: ColoredGraph, pi: Coloring) -> tuple[ColoredGraph, int]:
    """Flip every qualifying pair at once; returns the graph and edges removed."""
    pairs = flip_pairs(G, pi)
    if not pairs:
        return G, 0
    G2 = _flip_many(G, pi, pairs)
    return G2, G.m - G2.m


def remove_singletons(G: ColoredGraph, pi: Coloring, R: RepresentationMap) -> tuple[ColoredGraph, Coloring, VertexRenaming]:
    """Delete every vertex in a cell of size one; lifts fix them."""
    gone = [pi.perm[c] for c in pi.cell_ids() if pi.cell_size[c] == 1]
    _ops.add("singletons", pi.num_cells)
    if not gone:
        return G, pi, VertexRenaming.identity(G.n)
    alive = [True] * G.n
    for v in gone:
        alive[v] = False
    R.drop(sorted(gone))
    return rebuild(G, pi, alive)


def component_cells(G: ColoredGraph, pi: Coloring, weights: dict[int, dict[int, int]] | None = None) -> list[list[int]]:
    """Cell ids of each quotient component, components ordered by smallest cell id."""
    if weights is None:
        weights = rep_weights(G, pi)
    ids = sorted(weights)
    idx = {c: i for i, c in enumerate(ids)}
    rows, cols = [], []
    for c, row in weights.items():
        for d in row:
            rows.append(idx[c])
            cols.append(idx[d])
    k = len(ids)
    if k == 0:
        return []
    A = coo_matrix(([1] * len(rows), (rows, cols)), shape=(k, k))
    _, labels = connected_components(A, directed=True, connection="weak")
    groups: dict[int, list[int]] = {}
    for c in ids:
        groups.setdefault(labels[idx[c]], []).append(c)
    return sorted(groups.values(), key=lambda g: g[0])


def quotient_components(G: ColoredGraph, pi: Coloring) -> list[list[int]]:
    """Vertex sets of the weakly connected components of ``Q(G, pi)``."""
    return [sorted(v for c in comp for v in pi.cell(c)) for comp in component_cells(G, pi)]


def quotient_components_bfs(G: ColoredGraph, pi: Coloring) -> list[list[int]]:
    """Same as :func:`quotient_components`, by a BFS over ``N(v)`` plus ``v``'s cell."""
    seen = [False] * G.n
    comps = []
    for c in pi.cell_ids():
        s = pi.perm[c]
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in list(G.adj[v]) + pi.cell(pi.cell_of[v]):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps
