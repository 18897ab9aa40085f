"""Probing for sparse automorphisms that certify a cell to be an orbit.

Two IR paths are followed from different vertices of a cell; whenever the
singletons of both colorings correspond, the induced map is checked to be an
automorphism.  If every vertex of the cell is reached this way the cell is an
orbit, so one vertex of it can be individualized and the found automorphisms
account for the rest of the group.
"""

from __future__ import annotations

from typing import Collection

from scipy.cluster.hierarchy import DisjointSet

from . import _ops
from .graph import ColoredGraph
from .perm import SparseAutomorphism
from .refinement import (Coloring, Refinement, _individualize_inplace, refine_against,
                         refine_pair)


class OrbitPartition:
    """Union-find over vertices ``0..n-1``; untouched vertices are their own orbit."""

    def __init__(self, n: int):
        self.n = n
        self._ds = DisjointSet()

    def _add(self, v: int) -> None:
        if v not in self._ds:
            self._ds.add(v)

    def find(self, v: int) -> int:
        return self._ds[v] if v in self._ds else v

    def union(self, a: int, b: int) -> None:
        self._add(a)
        self._add(b)
        self._ds.merge(a, b)

    def same(self, a: int, b: int) -> bool:
        return a == b or (a in self._ds and b in self._ds and self._ds.connected(a, b))

    def orbit(self, v: int) -> set[int]:
        return set(self._ds.subset(v)) if v in self._ds else {v}

    def orbit_size(self, v: int) -> int:
        return self._ds.subset_size(v) if v in self._ds else 1

    def add_automorphism(self, phi: SparseAutomorphism) -> None:
        for v, w in phi.items():
            self.union(v, w)

    def orbits(self) -> list[list[int]]:
        """All orbits, singletons included, sorted."""
        seen = set()
        out = []
        for v in range(self.n):
            if v in seen:
                continue
            o = sorted(self.orbit(v))
            seen.update(o)
            out.append(o)
        return out


def _check(G: ColoredGraph, pi: Coloring, phi: SparseAutomorphism) -> bool:
    """Color and edge check that only looks at the support and its neighbors."""
    cell_of, adj = pi.cell_of, G.adj
    work = 0
    ok = True
    for v, w in phi.items():
        nv = adj[v]
        work += 1 + len(nv)
        if cell_of[v] != cell_of[w] or len(nv) != len(adj[w]):
            ok = False
            break
        nw = adj[w]
        if sorted(phi(u) for u in nv) != nw:
            ok = False
            break
    _ops.add("probe_check", work)
    return ok


def singleton_correspondence(G: ColoredGraph, pi: Coloring, pi1: Coloring, pi2: Coloring) -> SparseAutomorphism | None:
    """Map each vertex that is a singleton in both colorings to the like-named singleton of ``pi2``.

    Everything else is fixed.  Returns the map if it is a bijection and an
    automorphism of ``(G, pi)``, else ``None``.
    """
    s1, s2 = pi1.cell_size, pi2.cell_size
    c1, c2 = pi1.cell_of, pi2.cell_of
    img: dict[int, int] = {}
    scanned = 0
    for c in pi1.cell_ids():
        scanned += 1
        if s1[c] != 1:
            continue
        v = pi1.perm[c]
        if s2[c2[v]] != 1:
            continue
        if s2[c] != 1:
            return None
        w = pi2.perm[c]
        if w != v:
            img[v] = w
    _ops.add("probe_build", scanned)
    # images must be moved points too, otherwise two points share an image
    for w in img.values():
        if w not in img:
            return None
    if len(set(img.values())) != len(img):
        return None
    phi = SparseAutomorphism(img)
    return phi if _check(G, pi, phi) else None


def _covers(phi: SparseAutomorphism | None, orbits: OrbitPartition, found: list, a: int, b: int) -> bool:
    """Keep a verified ``phi`` and report whether ``a`` and ``b`` now share an orbit."""
    if phi:
        orbits.add_automorphism(phi)
        found.append(phi)
    return orbits.same(a, b)


def _descend(G: ColoredGraph, pi: Coloring, cid: int) -> None:
    """Individualize the smallest vertex of cell ``cid`` and refine, in place."""
    c = _individualize_inplace(pi, min(pi.cell(cid)))
    Refinement(G, pi, [c]).run()


def _first_nontrivial(pi: Coloring) -> int | None:
    for c in pi.cell_ids():
        if pi.cell_size[c] > 1:
            return c
    return None


def bounded_probe_ir(G: ColoredGraph, pi: Coloring, c_probe: int, L: float = float("inf"),
                     orbits: OrbitPartition | None = None) -> tuple[Coloring, list[SparseAutomorphism]]:
    """Bounded IR probing of the cell ``c_probe`` with at most ``L`` individualizations per path.

    On success returns the coloring with the smallest vertex of the cell
    individualized and refined, and automorphisms of ``(G, pi)`` under which
    the cell is one orbit.  On failure returns ``(pi, [])``.  ``orbits``, if
    given, must be empty; it receives the orbits of the returned maps.
    """
    cell = sorted(pi.cell(c_probe))
    if len(cell) < 2:
        raise ValueError("probe cell needs at least two vertices")
    if orbits is None:
        orbits = OrbitPartition(G.n)
    v1, v2 = cell[0], cell[1]
    fail = (pi, [])
    p1, p2 = pi.copy(), pi.copy()
    s1 = _individualize_inplace(p1, v1)
    s2 = _individualize_inplace(p2, v2)
    # no automorphism maps v1 to v2 unless both refinements run identically
    res = refine_pair(G, p1, [s1], p2, [s2])
    if res is None:
        return fail
    p1, p2, trace = res
    first = p1.copy()
    path: list[int] = [c_probe]
    found: list[SparseAutomorphism] = []
    phi = singleton_correspondence(G, pi, p1, p2)
    while not _covers(phi, orbits, found, v1, v2):
        if len(path) >= L:
            return fail
        C = _first_nontrivial(p1)
        if C is None or p2.cell_size[C] != p1.cell_size[C] or p2.cell_of[p2.perm[C]] != C:
            return fail
        path.append(C)
        _descend(G, p1, C)
        _descend(G, p2, C)
        phi = singleton_correspondence(G, pi, p1, p2)
    for w in cell[2:]:
        if orbits.same(v1, w):
            continue
        q = pi.copy()
        s = _individualize_inplace(q, w)
        q = refine_against(G, q, [s], trace)
        if q is None:
            return fail
        for C in path[1:]:
            if q.cell_size[C] < 2 or q.cell_of[q.perm[C]] != C:
                return fail
            _descend(G, q, C)
        phi = singleton_correspondence(G, pi, p1, q)
        if not _covers(phi, orbits, found, v1, w):
            return fail
    return first, found


def _in(vertices: Collection[int] | None, v: int) -> bool:
    return vertices is None or v in vertices


def probe_1ir_all_classes(G: ColoredGraph, pi: Coloring, K: list,
                          vertices: Collection[int] | None = None, stats=None) -> tuple[Coloring, list]:
    """Probe every non-trivial cell once with ``L = 1``, in ascending cell id.

    After a success the new coloring is adopted and the (shrunken) cell at the
    same id is tried again; after a failure the next cell is tried.  Only cells
    inside ``vertices`` are considered when it is given.  Orbit bookkeeping
    lives inside each probe: automorphisms found for one coloring say nothing
    about the next.
    """
    cursor = 0
    n = pi.n
    while cursor < n:
        c = cursor
        size = pi.cell_size[c]
        if size < 2 or not _in(vertices, pi.perm[c]):
            cursor += max(size, 1)
            continue
        new, found = bounded_probe_ir(G, pi, c, 1)
        if stats is not None:
            stats["probes_attempted"] += 1
        if found:
            if stats is not None:
                stats["probes_succeeded"] += 1
            K.extend(found)
            pi = new
        else:
            cursor += size
    return pi, K


def _cells_of_size(pi: Coloring, lo: int, hi: int, vertices) -> list[int]:
    return [c for c in pi.cell_ids() if lo <= pi.cell_size[c] <= hi and _in(vertices, pi.perm[c])]


def probe_inf_size2(G: ColoredGraph, pi: Coloring, K: list, vertices: Collection[int] | None = None,
                    stats=None) -> tuple[Coloring, list]:
    """Probe cells of size two without a length bound until the first failure."""
    while True:
        cands = _cells_of_size(pi, 2, 2, vertices)
        if not cands:
            return pi, K
        new, found = bounded_probe_ir(G, pi, cands[0])
        if stats is not None:
            stats["probes_attempted"] += 1
        if not found:
            return pi, K
        if stats is not None:
            stats["probes_succeeded"] += 1
        K.extend(found)
        pi = new


def probe_inf_sizeB(G: ColoredGraph, pi: Coloring, K: list,
                    B: int = 8, vertices: Collection[int] | None = None, stats=None) -> tuple[Coloring, list]:
    """Probe the smallest cell with ``2 < size <= B`` (ties by id) without a length bound."""
    cands = _cells_of_size(pi, 3, B, vertices)
    if not cands:
        return pi, K
    c = min(cands, key=lambda c: (pi.cell_size[c], c))
    new, found = bounded_probe_ir(G, pi, c, float("inf"))
    if stats is not None:
        stats["probes_attempted"] += 1
    if found:
        if stats is not None:
            stats["probes_succeeded"] += 1
        K.extend(found)
        pi = new
    return pi, K
