"""Low-degree reductions: degree 0, universal vertices, degree 1 and degree-2 patterns.

Every pass takes the current graph ``G`` with an equitable coloring ``pi``, a
representation map ``R`` keyed by ``G``'s vertex ids and, where symmetries are
discovered, a list ``K`` that receives kernel generators (also over ``G``'s
ids).  Passes only ever delete whole cells and add edges uniformly between
two cells, so the returned coloring is still equitable.
"""

from __future__ import annotations

import heapq
from collections import Counter
from typing import Sequence

from . import _ops
from ._edit import rebuild
from .graph import ColoredGraph, VertexRenaming
from .lifting import RepresentationMap, lift
from .perm import SparseAutomorphism
from .quotient import rep_weights
from .refinement import Coloring

Result = tuple[ColoredGraph, Coloring, VertexRenaming]


def _unchanged(G: ColoredGraph, pi: Coloring) -> Result:
    return G, pi, VertexRenaming.identity(G.n)


def _emit(K: list, R: RepresentationMap, cycles) -> None:
    K.append(lift(SparseAutomorphism.from_cycles(cycles), R))


def _emit_symmetric(K: list, R: RepresentationMap, vs: Sequence[int]) -> None:
    for a, b in zip(vs, vs[1:]):
        _emit(K, R, [(a, b)])


def _bump(stats, key, k):
    if stats is not None and k:
        stats[key] += k


def _drop_cells(G, pi, R, K, cells, stats, key) -> Result:
    alive = [True] * G.n
    for c in cells:
        vs = sorted(pi.cell(c))
        _emit_symmetric(K, R, vs)
        R.drop(vs)
        for v in vs:
            alive[v] = False
        _bump(stats, key, len(vs))
    return rebuild(G, pi, alive)


def remove_degree0(G: ColoredGraph, pi: Coloring, R: RepresentationMap, K: list, stats: Counter | None = None) -> Result:
    """Delete cells of isolated vertices; each cell contributes ``Sym(cell)``."""
    cells = [c for c in pi.cell_ids() if not G.adj[pi.perm[c]]]
    _ops.add("deg0", pi.num_cells)
    if not cells:
        return _unchanged(G, pi)
    return _drop_cells(G, pi, R, K, cells, stats, "deg0")


def remove_universal(G: ColoredGraph, pi: Coloring, R: RepresentationMap, K: list, stats: Counter | None = None) -> Result:
    """Delete cells of vertices adjacent to every other vertex.

    Such a cell is complete inside, so every permutation of it is an
    automorphism, exactly as for isolated vertices.
    """
    n = G.n
    cells = [c for c in pi.cell_ids() if len(G.adj[pi.perm[c]]) == n - 1 and n > 1]
    _ops.add("universal", pi.num_cells)
    if not cells:
        return _unchanged(G, pi)
    return _drop_cells(G, pi, R, K, cells, stats, "universal")


def remove_degree1(G: ColoredGraph, pi: Coloring, R: RepresentationMap, K: list, stats: Counter | None = None) -> Result:
    """Repeatedly fold cells of degree-1 vertices into their neighbors.

    A leaf cell ``C`` hanging off cell ``P`` is deleted and every ``p`` in
    ``P`` absorbs its own leaves, which may be permuted freely.  Cells are
    handled smallest id first and a ``P`` that drops to degree 1 is queued
    again; one that drops to degree 0 stays for the degree-0 pass.  A leaf cell
    matched onto itself (disjoint edges) is deleted together with the
    generators of its wreath product ``C2 wr Sym(k)``.
    """
    adj, perm, cell_of, size = G.adj, pi.perm, pi.cell_of, pi.cell_size
    alive = [True] * G.n
    deg: dict[int, int] = {}  # current degree of touched vertices

    def degree(v):
        d = deg.get(v)
        return len(adj[v]) if d is None else d

    heap = [c for c in pi.cell_ids() if len(adj[perm[c]]) == 1]
    _ops.add("deg1", pi.num_cells)
    if not heap:
        return _unchanged(G, pi)
    heapq.heapify(heap)
    work = 0
    changed = False
    while heap:
        c = heapq.heappop(heap)
        if not alive[perm[c]] or degree(perm[c]) != 1:
            continue
        changed = True
        members = perm[c:c + size[c]]
        attach = {}
        for v in members:
            nb = adj[v]
            work += len(nb)
            attach[v] = next(u for u in nb if alive[u])
        P = cell_of[attach[members[0]]]
        if P == c:
            pairs = sorted((v, u) for v, u in attach.items() if v < u)
            _emit(K, R, [pairs[0]])
            for (a1, b1), (a2, b2) in zip(pairs, pairs[1:]):
                _emit(K, R, [(a1, a2), (b1, b2)])
            R.drop(sorted(members))
            for v in members:
                alive[v] = False
            _bump(stats, "deg1", len(members))
            continue
        groups: dict[int, list[int]] = {}
        for v in members:
            groups.setdefault(attach[v], []).append(v)
        for p in sorted(groups):
            leaves = sorted(groups[p])
            _emit_symmetric(K, R, leaves)
            R.absorb(p, leaves)
            deg[p] = degree(p) - len(leaves)
        for v in members:
            alive[v] = False
        _bump(stats, "deg1", len(members))
        if degree(perm[P]) == 1:
            heapq.heappush(heap, P)
    _ops.add("deg1", work)
    if not changed:
        return _unchanged(G, pi)
    return rebuild(G, pi, alive)


# -- degree-2 patterns -------------------------------------------------------

def link_cells(weights) -> dict[int, tuple[int, int]]:
    """Cells of degree-2 vertices with one neighbor in each of two other, distinct cells."""
    sides: dict[int, tuple[int, int]] = {}
    for c, row in weights.items():
        if len(row) == 2 and c not in row and all(w == 1 for w in row.values()):
            a, b = sorted(row)
            sides[c] = (a, b)
    return sides


def link_chains(G: ColoredGraph, pi: Coloring, weights=None) -> list[tuple[int, list[int], int]]:
    """Maximal chains ``(X, [C1..Ct], Y)`` of link cells (see :func:`link_cells`).

    ``X`` and ``Y`` are the non-link cells at the two ends, ``X`` being the
    end reached first from the chain's smallest cell.  Closed rings of link
    cells are skipped.
    """
    if weights is None:
        weights = rep_weights(G, pi)
    sides = link_cells(weights)
    seen: set[int] = set()
    chains = []
    for c in sorted(sides):
        if c in seen:
            continue
        seen.add(c)
        ends = []
        halves = []
        ring = False
        for start in sides[c]:
            prev, cur, half = c, start, []
            while cur in sides:
                if cur == c:
                    ring = True
                    break
                seen.add(cur)
                half.append(cur)
                a, b = sides[cur]
                prev, cur = cur, (b if a == prev else a)
            ends.append(cur)
            halves.append(half)
            if ring:
                break
        if ring:
            continue
        cells = halves[0][::-1] + [c] + halves[1]
        chains.append((ends[0], cells, ends[1]))
    return chains


def _walk(G: ColoredGraph, x: int, c1: int, alive_len: int) -> tuple[list[int], int]:
    """Follow a degree-2 path that starts ``x -> c1`` for ``alive_len`` steps."""
    path = [c1]
    prev, cur = x, c1
    for _ in range(alive_len - 1):
        a, b = G.adj[cur]
        prev, cur = cur, (b if a == prev else a)
        path.append(cur)
    a, b = G.adj[cur]
    return path, (b if a == prev else a)


def _orient(chains, size, want):
    """Yield chains as ``(X, cells, Y)`` with ``X`` satisfying ``want``; smaller X first if both do."""
    for X, cells, Y in chains:
        if X == Y:
            continue
        fwd = want(X, cells, Y)
        bwd = want(Y, cells[::-1], X)
        if fwd and (not bwd or X < Y):
            yield X, cells, Y
        elif bwd:
            yield Y, cells[::-1], X


def reduce_obfuscated_matchings(G: ColoredGraph, pi: Coloring, R: RepresentationMap,
                                stats: Counter | None = None, weights=None) -> Result:
    """Replace single middle cells that encode the same perfect matching by direct edges."""
    if weights is None:
        weights = rep_weights(G, pi)
    size, cell_of = pi.cell_size, pi.cell_of
    groups: dict[tuple[int, int], list[int]] = {}
    for M, (A, B) in link_cells(weights).items():
        if size[A] == size[B] == size[M]:
            groups.setdefault((A, B), []).append(M)
    removed: set[int] = set()
    ends: set[int] = set()
    alive = [True] * G.n
    added = []
    work = 0
    # smallest middle cell first: in a ring of link cells (X-M1-Y-M2) either
    # pair can play the middles, and this picks one by cell order
    for (X, Y), middles in sorted(groups.items(), key=lambda kv: (min(kv[1]), kv[0])):
        # a cell cannot be both an endpoint and a deleted middle in one pass
        if X in removed or Y in removed or any(M in ends for M in middles):
            continue
        ref = None
        take = []
        for M in sorted(middles):
            mate = {}
            for c in pi.cell(M):
                a, b = G.adj[c]
                x, y = (a, b) if cell_of[a] == X else (b, a)
                mate[x] = (y, c)
            work += 2 * size[M]
            if ref is None:
                ref = {x: y for x, (y, _) in mate.items()}
            elif any(ref[x] != y for x, (y, _) in mate.items()):
                continue
            take.append(mate)
        w = weights[X].get(Y, 0)
        if w == 1:
            if any(ref[x] != next(u for u in G.adj[x] if cell_of[u] == Y) for x in ref):
                continue
        elif w != 0:
            continue
        else:
            added.extend(sorted(ref.items()))
        for x in sorted(ref):
            R.absorb(x, [mate[x][1] for mate in take])
        ends.update((X, Y))
        removed.update(cell_of[next(iter(mate.values()))[1]] for mate in take)
        for mate in take:
            for _, c in mate.values():
                alive[c] = False
            _bump(stats, "deg2_match", len(mate))
    _ops.add("deg2", work)
    if all(alive):
        return _unchanged(G, pi)
    return rebuild(G, pi, alive, added)


def reduce_unique_endpoint_paths(G: ColoredGraph, pi: Coloring, R: RepresentationMap,
                                 stats: Counter | None = None, weights=None,
                                 t_cap: int | None = None) -> Result:
    """Contract chains in which each ``x`` starts exactly one path into direct ``x``-``y`` edges."""
    if weights is None:
        weights = rep_weights(G, pi)
    size, cell_of = pi.cell_size, pi.cell_of
    chains = link_chains(G, pi, weights)
    alive = [True] * G.n
    added = []
    linked: set[tuple[int, int]] = set()
    work = 0

    def want(X, cells, Y):
        return size[X] == size[cells[0]]

    for X, cells, Y in _orient(chains, size, want):
        if t_cap is not None and len(cells) > t_cap:
            continue
        pair = (min(X, Y), max(X, Y))
        if weights[X].get(Y, 0) or pair in linked:
            continue
        linked.add(pair)
        C1 = cells[0]
        for x in sorted(pi.cell(X)):
            c1 = next(u for u in G.adj[x] if cell_of[u] == C1)
            path, y = _walk(G, x, c1, len(cells))
            work += len(path) + len(G.adj[x])
            R.absorb(x, path)
            for c in path:
                alive[c] = False
            added.append((x, y))
        _bump(stats, "deg2_unique", size[C1] * len(cells))
    _ops.add("deg2", work)
    if not added:
        return _unchanged(G, pi)
    return rebuild(G, pi, alive, added)


def reduce_obfuscated_edge_flip(G: ColoredGraph, pi: Coloring, R: RepresentationMap,
                                stats: Counter | None = None, weights=None) -> Result:
    """Delete chains that connect every ``x`` to every ``y`` by exactly one path.

    No edges replace them; the paths go into flip records of ``R`` so a lift
    can route each one by the images of both its endpoints.
    """
    if weights is None:
        weights = rep_weights(G, pi)
    size, cell_of = pi.cell_size, pi.cell_of
    chains = link_chains(G, pi, weights)
    alive = [True] * G.n
    work = 0

    def want(X, cells, Y):
        return size[cells[0]] == size[X] * size[Y]

    for X, cells, Y in _orient(chains, size, want):
        C1 = cells[0]
        records = []
        ys = set()
        Ycell = pi.cell(Y)
        ok = True
        for x in sorted(pi.cell(X)):
            ends = []
            for c1 in G.adj[x]:
                if cell_of[c1] != C1:
                    continue
                path, y = _walk(G, x, c1, len(cells))
                work += len(path)
                ends.append(y)
                records.append((x, y, path))
            work += len(G.adj[x])
            if len(set(ends)) != len(Ycell):
                ok = False
                break
            ys.update(ends)
        if not ok or len(ys) != len(Ycell):
            continue
        for x, y, path in records:
            R.add_flip(x, y, path, tag=C1)
            for c in path:
                alive[c] = False
        _bump(stats, "deg2_flip", size[C1] * len(cells))
    _ops.add("deg2", work)
    if all(alive):
        return _unchanged(G, pi)
    return rebuild(G, pi, alive)
