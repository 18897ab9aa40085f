"""Vertex-colored simple graphs in compressed adjacency form."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .perm import SparseAutomorphism


class GraphError(ValueError):
    pass


def _dense_colors(values: Sequence) -> list[int]:
    # ids follow the sorted order of the distinct input values, so relabeling
    # the vertices never changes which id a color receives
    palette = {c: i for i, c in enumerate(sorted(set(values)))}
    return [palette[c] for c in values]


class ColoredGraph:
    """Undirected simple graph with a vertex coloring.

    Neighbor lists are sorted; ``indptr``/``indices`` expose the same data in
    CSR layout.  Color ids are dense in ``range(num_colors)``.  Treat instances
    as immutable.
    """

    __slots__ = ("n", "m", "colors", "_adj", "_csr")

    def __init__(self, adj: list[list[int]], colors: list[int]):
        # trusted constructor: adj sorted & symmetric, colors dense
        self.n = len(adj)
        self._adj = adj
        self.colors = colors
        self.m = sum(len(a) for a in adj) // 2
        self._csr = None

    @property
    def adj(self) -> list[list[int]]:
        return self._adj

    def neighbors(self, v: int) -> list[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        a = self._adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nb in enumerate(self._adj):
            for v in nb:
                if u < v:
                    yield u, v

    @property
    def num_colors(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def _build_csr(self):
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self._adj])
        indices = np.fromiter((v for a in self._adj for v in a), dtype=np.int64, count=int(indptr[-1]))
        self._csr = (indptr, indices)

    @property
    def indptr(self) -> np.ndarray:
        if self._csr is None:
            self._build_csr()
        return self._csr[0]

    @property
    def indices(self) -> np.ndarray:
        if self._csr is None:
            self._build_csr()
        return self._csr[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.n == other.n and self.colors == other.colors and self._adj == other._adj

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.m}, colors={self.num_colors})"


def build_graph(n: int, edges: Iterable[tuple[int, int]], colors: Sequence | Mapping | None = None) -> ColoredGraph:
    """Validate and normalize an edge list into a :class:`ColoredGraph`.

    ``colors`` may be a sequence indexed by vertex, a mapping (missing
    vertices get color 0), or ``None`` for a uniform coloring.  Color values
    are compacted to dense ids in sorted order.
    """
    if n < 0:
        raise GraphError("negative vertex count")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    if colors is None:
        col = [0] * n
    elif isinstance(colors, Mapping):
        col = [colors.get(v, 0) for v in range(n)]
    else:
        col = list(colors)
        if len(col) != n:
            raise GraphError(f"expected {n} colors, got {len(col)}")
    return ColoredGraph([sorted(a) for a in adj], _dense_colors(col))


def from_adjacency(adj: Sequence[Iterable[int]], colors: Sequence[int]) -> ColoredGraph:
    """Build from already-valid neighbor collections (no duplicate checks)."""
    return ColoredGraph([sorted(a) for a in adj], _dense_colors(colors))


@dataclass
class VertexRenaming:
    """Contiguous renaming of a vertex subset.

    ``backward[new] = old`` is total on the new graph; ``forward[old]`` is
    ``-1`` for vertices that were dropped.
    """

    backward: list[int]
    n_old: int
    forward: list[int] = field(init=False, repr=False)

    def __post_init__(self):
        fwd = [-1] * self.n_old
        for new, old in enumerate(self.backward):
            fwd[old] = new
        self.forward = fwd

    @classmethod
    def identity(cls, n: int) -> VertexRenaming:
        return cls(list(range(n)), n)

    def then(self, inner: VertexRenaming) -> VertexRenaming:
        """Compose with a renaming of the new graph: ``inner`` maps newer ids to ours."""
        return VertexRenaming([self.backward[v] for v in inner.backward], self.n_old)


def induced_subgraph(G: ColoredGraph, keep: Iterable[int]) -> tuple[ColoredGraph, VertexRenaming]:
    keep_sorted = sorted(set(keep))
    ren = VertexRenaming(keep_sorted, G.n)
    fwd = ren.forward
    adj = [[fwd[u] for u in G.adj[v] if fwd[u] >= 0] for v in keep_sorted]
    return from_adjacency(adj, [G.colors[v] for v in keep_sorted]), ren


def _as_images(G: ColoredGraph, perm) -> list[int]:
    if isinstance(perm, SparseAutomorphism):
        if any(not 0 <= v < G.n for v in perm.support):
            raise GraphError("permutation moves points outside the graph")
        return perm.to_array(G.n)
    images = list(perm)
    if len(images) != G.n or sorted(images) != list(range(G.n)):
        raise GraphError("not a bijection on the vertex set")
    return images


def apply_permutation(G: ColoredGraph, perm) -> ColoredGraph:
    """Relabel every vertex ``v`` as ``perm(v)``."""
    p = _as_images(G, perm)
    adj: list[list[int]] = [[] for _ in range(G.n)]
    colors = [0] * G.n
    for v in range(G.n):
        adj[p[v]] = sorted(p[u] for u in G.adj[v])
        colors[p[v]] = G.colors[v]
    return ColoredGraph(adj, colors)


def is_automorphism(G: ColoredGraph, perm) -> bool:
    """True iff ``perm`` preserves colors and the edge set.

    Only the moved points and their neighborhoods are inspected.
    """
    if isinstance(perm, SparseAutomorphism):
        moved = perm.items()
        if any(not 0 <= v < G.n for v, _ in moved):
            return False
        f = perm
    else:
        try:
            p = _as_images(G, perm)
        except GraphError:
            return False
        moved = [(v, w) for v, w in enumerate(p) if v != w]
        f = p.__getitem__
    colors, adj = G.colors, G.adj
    for v, w in moved:
        if colors[v] != colors[w]:
            return False
        nv, nw = adj[v], adj[w]
        if len(nv) != len(nw):
            return False
        if sorted(f(u) for u in nv) != nw:
            return False
    return True
