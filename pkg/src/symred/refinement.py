"""Color refinement on ordered partitions with position-based cell ids.

A cell's id is the index of its first vertex in the ordered partition.  When a
cell splits, the fragment of vertices with the fewest neighbors in the
splitter comes first, so every id is determined by isomorphism-invariant data
and refinement commutes with relabeling the graph.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Iterator, Sequence

from . import _ops
from .graph import ColoredGraph


class Coloring:
    """Ordered partition of ``range(n)`` into cells.

    ``perm`` lists the vertices cell by cell, ``pos`` is its inverse,
    ``cell_of[v]`` is the id (start position) of the cell holding ``v`` and
    ``cell_size[i]`` is the size of the cell starting at position ``i`` (0 for
    positions that do not start a cell).
    """

    __slots__ = ("perm", "pos", "cell_of", "cell_size")

    def __init__(self, perm, pos, cell_of, cell_size):
        self.perm = perm
        self.pos = pos
        self.cell_of = cell_of
        self.cell_size = cell_size

    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> Coloring:
        """Cells ordered by color value; vertices inside a cell by id."""
        n = len(colors)
        perm = sorted(range(n), key=lambda v: (colors[v], v))
        pos = [0] * n
        cell_of = [0] * n
        cell_size = [0] * n
        start = 0
        for i, v in enumerate(perm):
            pos[v] = i
            if i > 0 and colors[v] != colors[perm[i - 1]]:
                start = i
            cell_of[v] = start
            cell_size[start] += 1
        return cls(perm, pos, cell_of, cell_size)

    @classmethod
    def unit(cls, n: int) -> Coloring:
        return cls.from_colors([0] * n)

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]]) -> Coloring:
        cells = [list(c) for c in cells]
        perm = [v for c in cells for v in c]
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError("cells do not partition range(n)")
        pos = [0] * n
        cell_of = [0] * n
        cell_size = [0] * n
        i = 0
        for c in cells:
            if not c:
                raise ValueError("empty cell")
            start = i
            cell_size[start] = len(c)
            for v in c:
                pos[v] = i
                cell_of[v] = start
                i += 1
        return cls(perm, pos, cell_of, cell_size)

    @property
    def n(self) -> int:
        return len(self.perm)

    def copy(self) -> Coloring:
        return Coloring(self.perm[:], self.pos[:], self.cell_of[:], self.cell_size[:])

    def cell_ids(self) -> Iterator[int]:
        i, n, size = 0, len(self.perm), self.cell_size
        while i < n:
            yield i
            i += size[i]

    def cell(self, cid: int) -> list[int]:
        return self.perm[cid:cid + self.cell_size[cid]]

    def cells(self) -> list[list[int]]:
        return [self.cell(c) for c in self.cell_ids()]

    @property
    def num_cells(self) -> int:
        return sum(1 for _ in self.cell_ids())

    def is_discrete(self) -> bool:
        return all(self.cell_size[c] == 1 for c in self.cell_ids())

    def is_singleton(self, v: int) -> bool:
        return self.cell_size[self.cell_of[v]] == 1

    def partition(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(c) for c in self.cells())

    def refines(self, other: Coloring) -> bool:
        """True iff every cell of ``self`` lies inside a cell of ``other``."""
        return all(len({other.cell_of[v] for v in c}) == 1 for c in self.cells())

    def as_colors(self) -> list[int]:
        """Dense color per vertex, numbered in cell order."""
        rank = {c: i for i, c in enumerate(self.cell_ids())}
        return [rank[c] for c in self.cell_of]

    def restrict(self, backward: Sequence[int]) -> Coloring:
        """Induced ordered partition on ``backward`` (new id -> old id)."""
        fwd = {old: new for new, old in enumerate(backward)}
        cells = []
        for cid in self.cell_ids():
            part = [fwd[v] for v in self.cell(cid) if v in fwd]
            if part:
                cells.append(part)
        return Coloring.from_cells(cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.cell_of == other.cell_of

    def __repr__(self) -> str:
        return "Coloring(" + " ".join("{" + ",".join(map(str, sorted(c))) + "}" for c in self.cells()) + ")"


def individualize(pi: Coloring, v: int) -> Coloring:
    """Return a copy of ``pi`` with ``v`` split off into its own cell.

    ``v`` moves to the last position of its cell; the singleton's id is that
    position, and the remainder keeps the old id.  A vertex that is already a
    singleton leaves the partition unchanged.
    """
    out = pi.copy()
    _individualize_inplace(out, v)
    return out


def _individualize_inplace(pi: Coloring, v: int) -> int:
    start = pi.cell_of[v]
    size = pi.cell_size[start]
    if size == 1:
        return start
    last = start + size - 1
    u = pi.perm[last]
    i = pi.pos[v]
    pi.perm[i], pi.perm[last] = u, v
    pi.pos[u], pi.pos[v] = i, last
    pi.cell_size[start] = size - 1
    pi.cell_size[last] = 1
    pi.cell_of[v] = last
    return last


class Refinement:
    """Stepwise color refinement on a coloring owned by this object.

    Each :meth:`step` processes one splitter cell and returns its trace event,
    an invariant summary of what the step did.  Two refinements related by an
    automorphism produce identical event sequences, which lets callers compare
    two runs in lockstep and stop at the first difference.
    """

    def __init__(self, G: ColoredGraph, pi: Coloring, seeds: Iterable[int] | None = None):
        self.adj = G.adj
        self.pi = pi
        n = pi.n
        self.count = [0] * n
        self.in_work = [False] * n
        self.heap: list[tuple[int, int]] = []
        seeds = pi.cell_ids() if seeds is None else seeds
        for c in seeds:
            self._push(c)
        self.num_cells = pi.num_cells
        self.done = False

    def _push(self, c: int) -> None:
        self.in_work[c] = True
        heapq.heappush(self.heap, (self.pi.cell_size[c], c))

    def _pop(self) -> int | None:
        heap, size, in_work = self.heap, self.pi.cell_size, self.in_work
        while heap:
            sz, c = heapq.heappop(heap)
            if in_work[c] and size[c] == sz:
                in_work[c] = False
                return c
        return None

    def step(self):
        """Process one splitter; returns its trace event or ``None`` when stable."""
        if self.done:
            return None
        pi = self.pi
        s = self._pop() if self.num_cells < pi.n else None
        if s is None:
            self.done = True
            return None
        perm, cell_of, cell_size, adj, count = pi.perm, pi.cell_of, pi.cell_size, self.adj, self.count
        ssize = cell_size[s]
        touched: list[int] = []
        work = ssize
        for u in perm[s:s + ssize]:
            nb = adj[u]
            work += len(nb)
            for w in nb:
                if count[w] == 0:
                    touched.append(w)
                count[w] += 1
        by_cell: dict[int, list[int]] = {}
        for w in touched:
            c = cell_of[w]
            if c in by_cell:
                by_cell[c].append(w)
            else:
                by_cell[c] = [w]
        event = []
        for c in sorted(by_cell):
            frag = self._split(c, by_cell[c])
            if frag is not None:
                event.append((c, frag))
        for w in touched:
            count[w] = 0
        _ops.add("refine", work + len(touched))
        return (s, ssize, tuple(event))

    def _split(self, c: int, T: list[int]):
        pi, count = self.pi, self.count
        perm, pos, cell_of, cell_size = pi.perm, pi.pos, pi.cell_of, pi.cell_size
        size = cell_size[c]
        if size == 1:
            return None
        k0 = count[T[0]]
        if len(T) == size and all(count[w] == k0 for w in T):
            return None
        # swap touched vertices into the tail of the cell
        b = c + size
        for w in T:
            b -= 1
            i = pos[w]
            u = perm[b]
            perm[i], perm[b] = u, w
            pos[u], pos[w] = i, b
        T.sort(key=count.__getitem__)
        untouched = size - len(T)
        starts = []
        if untouched:
            starts.append((c, untouched))
        i = b
        run_start = b
        for j, w in enumerate(T):
            if j > 0 and count[w] != count[T[j - 1]]:
                starts.append((run_start, i - run_start))
                run_start = i
            perm[i] = w
            pos[w] = i
            i += 1
        starts.append((run_start, i - run_start))
        self.num_cells += len(starts) - 1
        was_queued = self.in_work[c]
        for st, sz in starts:
            cell_size[st] = sz
        for st, sz in starts:
            if st != c or not untouched:
                for k in range(st, st + sz):
                    cell_of[perm[k]] = st
        if was_queued:
            for st, _ in starts:
                self._push(st)
        else:
            big = max(starts, key=lambda t: (t[1], -t[0]))
            for st, sz in starts:
                if (st, sz) != big:
                    self._push(st)
        return tuple(sz for _, sz in starts)

    def run(self) -> Coloring:
        while self.step() is not None:
            pass
        return self.pi


def refine(G: ColoredGraph, pi: Coloring | None = None, worklist: Iterable[int] | None = None) -> Coloring:
    """Coarsest equitable refinement of ``pi`` (a new object).

    Without ``worklist`` every cell is used as a splitter.  Passing only the
    cells that changed since ``pi`` was last equitable (e.g. a freshly
    individualized singleton) gives the same result for less work.
    """
    if pi is None:
        pi = Coloring.from_colors(G.colors)
    return Refinement(G, pi.copy(), worklist).run()


def refine_with_trace(G: ColoredGraph, pi: Coloring, worklist=None) -> tuple[Coloring, list]:
    r = Refinement(G, pi.copy(), worklist)
    trace = []
    while (ev := r.step()) is not None:
        trace.append(ev)
    return r.pi, trace


def refine_against(G: ColoredGraph, pi: Coloring, worklist, reference: list) -> Coloring | None:
    """Refine while checking each step against a recorded trace.

    Returns ``None`` as soon as the run deviates from ``reference``.
    """
    r = Refinement(G, pi.copy(), worklist)
    i = 0
    while (ev := r.step()) is not None:
        if i >= len(reference) or reference[i] != ev:
            return None
        i += 1
    return r.pi if i == len(reference) else None


def refine_pair(G: ColoredGraph, pi1: Coloring, seeds1, pi2: Coloring, seeds2):
    """Refine two colorings in lockstep.

    Returns ``(pi1', pi2', trace)`` when both runs produce identical traces,
    otherwise ``None`` right after the first mismatching step.
    """
    r1 = Refinement(G, pi1.copy(), seeds1)
    r2 = Refinement(G, pi2.copy(), seeds2)
    trace = []
    while True:
        e1 = r1.step()
        e2 = r2.step()
        if e1 != e2:
            return None
        if e1 is None:
            return r1.pi, r2.pi, trace
        trace.append(e1)


def individualize_refine(G: ColoredGraph, pi: Coloring, v: int) -> Coloring:
    out = pi.copy()
    c = _individualize_inplace(out, v)
    return Refinement(G, out, [c]).run()


def is_equitable(G: ColoredGraph, pi: Coloring) -> bool:
    """Direct check: same-cell vertices have equal neighbor counts in every cell."""
    cell_of = pi.cell_of
    for cid in pi.cell_ids():
        sig = None
        for v in pi.cell(cid):
            cnt: dict[int, int] = {}
            for u in G.adj[v]:
                c = cell_of[u]
                cnt[c] = cnt.get(c, 0) + 1
            if sig is None:
                sig = cnt
            elif cnt != sig:
                return False
    return True
