"""Named test graphs and seeded random generators."""

from __future__ import annotations

import itertools

import networkx as nx
import numpy as np

from .graph import ColoredGraph, build_graph


def from_networkx(g: nx.Graph, colors=None) -> ColoredGraph:
    nodes = sorted(g.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(idx[u], idx[v]) for u, v in g.edges()], colors)


def path(n: int, colors=None) -> ColoredGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], colors)


def cycle(n: int, colors=None) -> ColoredGraph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], colors)


def star(k: int, colors=None) -> ColoredGraph:
    """K_{1,k} with center 0."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)], colors)


def complete(n: int, colors=None) -> ColoredGraph:
    return build_graph(n, itertools.combinations(range(n), 2), colors)


def complete_bipartite(a: int, b: int, colored: bool = True) -> ColoredGraph:
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return build_graph(a + b, edges, [0] * a + [1] * b if colored else None)


def wheel(k: int) -> ColoredGraph:
    """Hub 0 joined to the rim cycle 1..k."""
    rim = [(1 + i, 1 + (i + 1) % k) for i in range(k)]
    return build_graph(k + 1, rim + [(0, i) for i in range(1, k + 1)])


def spider(legs) -> ColoredGraph:
    """Center 0 with one path per entry of ``legs`` (entries are leg lengths)."""
    edges, nxt = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def hypercube(d: int) -> ColoredGraph:
    n = 1 << d
    return build_graph(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def petersen() -> ColoredGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def disjoint_union(*graphs: ColoredGraph, recolor: bool = False) -> ColoredGraph:
    """Disjoint union; with ``recolor`` each part gets its own color range."""
    edges, colors, off, coff = [], [], 0, 0
    for g in graphs:
        edges += [(u + off, v + off) for u, v in g.edges()]
        colors += [c + coff for c in g.colors]
        off += g.n
        if recolor:
            coff += g.num_colors
    return build_graph(off, edges, colors)


def match_gadget(k: int = 4) -> ColoredGraph:
    """Two middle layers encoding the same perfect matching between X and Y.

    Vertices: M1 = 0..k-1, M2 = k..2k-1, X = 2k..3k-1, Y = 3k..4k-1, colored
    0, 1, 2, 3 in that order.  ``x_i - m1_i - y_i`` and ``x_i - m2_i - y_i``.
    """
    M1, M2, X, Y = (list(range(j * k, (j + 1) * k)) for j in range(4))
    edges = []
    for i in range(k):
        for m in (M1[i], M2[i]):
            edges += [(X[i], m), (m, Y[i])]
    return build_graph(4 * k, edges, [0] * k + [1] * k + [2] * k + [3] * k)


def flip_gadget(a: int = 2, b: int = 4) -> ColoredGraph:
    """X = 0..a-1 joined to every y in Y = a..a+b-1 by its own length-3 path."""
    edges = []
    nxt = a + b
    for x in range(a):
        for y in range(a, a + b):
            edges += [(x, nxt), (nxt, nxt + 1), (nxt + 1, y)]
            nxt += 2
    return build_graph(nxt, edges)


P3 = path(3)
P4 = path(4)
STAR3 = star(3)
C4 = cycle(4)
Q3 = hypercube(3)
PETERSEN = petersen()
MATCH_GADGET = match_gadget()
FLIP_GADGET = flip_gadget()
ASYMMETRIC_TREE = spider([1, 2, 3])

FIXTURES: dict[str, ColoredGraph] = {
    "P3": P3,
    "P4": P4,
    "STAR3": STAR3,
    "C4": C4,
    "Q3": Q3,
    "PETERSEN": PETERSEN,
    "MATCH-GADGET": MATCH_GADGET,
    "FLIP-GADGET": FLIP_GADGET,
}


def random_gnp(n: int, p: float, seed: int, colors=None) -> ColoredGraph:
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed), colors)


def random_tree(n: int, seed: int) -> ColoredGraph:
    if n == 1:
        return build_graph(1, [])
    return from_networkx(nx.random_labeled_tree(n, seed=seed))


def random_regular(n: int, d: int, seed: int) -> ColoredGraph:
    return from_networkx(nx.random_regular_graph(d, n, seed=seed))


def random_coloring(n: int, k: int, seed: int) -> list[int]:
    return np.random.default_rng(seed).integers(0, k, size=n).tolist()


def random_series_parallel(n: int, seed: int, pendant: float = 0.15) -> ColoredGraph:
    """Sparse graph grown by series subdivisions, parallel detours and pendants.

    Starting from one edge, each step picks a random edge ``(u, v)`` and either
    subdivides it, adds a new vertex adjacent to both ends, or hangs a pendant
    vertex off ``u``.  Lots of degree-1 and degree-2 structure, no multi-edges.
    """
    rng = np.random.default_rng(seed)
    edges = [(0, 1)]
    nv = 2
    while nv < n:
        i = int(rng.integers(len(edges)))
        u, v = edges[i]
        r = rng.random()
        w = nv
        nv += 1
        if r < pendant:
            new = [(u, w)]
        elif r < 0.55:
            edges[i] = edges[-1]
            edges.pop()
            new = [(u, w), (w, v)]
        else:
            new = [(u, w), (w, v)]
        edges += new
    return build_graph(nv, edges)
