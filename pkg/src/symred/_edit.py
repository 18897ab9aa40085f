"""Shared graph surgery for passes that delete whole cells."""

from __future__ import annotations

from typing import Iterable, Sequence

from . import _ops
from .graph import ColoredGraph, VertexRenaming
from .refinement import Coloring


def rebuild(G: ColoredGraph, pi: Coloring, alive: Sequence[bool],
            add_edges: Iterable[tuple[int, int]] = ()) -> tuple[ColoredGraph, Coloring, VertexRenaming]:
    """Keep the ``alive`` vertices, add ``add_edges`` (old ids) and rename.

    Cell order and the order of vertices inside cells are kept, so cell ids
    of the result are again determined by invariant data.
    """
    backward = [v for v in range(G.n) if alive[v]]
    ren = VertexRenaming(backward, G.n)
    fwd = ren.forward
    adj = [[fwd[u] for u in G.adj[v] if alive[u]] for v in backward]
    extra = False
    for u, v in add_edges:
        adj[fwd[u]].append(fwd[v])
        adj[fwd[v]].append(fwd[u])
        extra = True
    if extra:
        for a in adj:
            a.sort()
    _ops.add("rebuild", G.n + 2 * G.m)
    G2 = ColoredGraph(adj, [G.colors[v] for v in backward])
    return G2, pi.restrict(backward), ren


def alive_degree(G: ColoredGraph, v: int, alive: Sequence[bool]) -> int:
    return sum(1 for u in G.adj[v] if alive[u])
