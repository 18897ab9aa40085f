"""Reference machinery: brute-force automorphisms, group closure and a small IR solver."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .graph import ColoredGraph, is_automorphism
from .perm import SparseAutomorphism
from .probing import OrbitPartition
from .refinement import Coloring, _individualize_inplace, refine_against, refine_with_trace


class OracleLimitError(ValueError):
    pass


def brute_force_aut(G: ColoredGraph, limit: int = 10, colors: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """All color- and edge-preserving permutations, as image tuples.

    Plain backtracking over vertices in id order; an image is admissible when
    it has the same color and the same adjacency to every vertex placed so
    far.  ``colors`` overrides the graph's own coloring.
    """
    n = G.n
    if n > limit:
        raise OracleLimitError(f"graph has {n} vertices, oracle limit is {limit}")
    col = list(G.colors if colors is None else colors)
    nbr = [set(a) for a in G.adj]
    img = [-1] * n
    used = [False] * n
    out: list[tuple[int, ...]] = []

    def place(v: int) -> None:
        if v == n:
            out.append(tuple(img))
            return
        for w in range(n):
            if used[w] or col[w] != col[v] or len(nbr[w]) != len(nbr[v]):
                continue
            if all((u in nbr[v]) == (img[u] in nbr[w]) for u in range(v)):
                img[v] = w
                used[w] = True
                place(v + 1)
                used[w] = False
        img[v] = -1

    place(0)
    return out


def group_closure(gens: Iterable, n: int, cap: int = 10**6) -> set[tuple[int, ...]]:
    """Every product of the generators, found breadth first from the identity."""
    arrays = []
    for g in gens:
        if isinstance(g, SparseAutomorphism):
            arrays.append(tuple(g.to_array(n)))
        else:
            arrays.append(tuple(g))
    ident = tuple(range(n))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in arrays:
            y = tuple(g[i] for i in x)
            if y not in seen:
                if len(seen) >= cap:
                    raise OracleLimitError(f"group has more than {cap} elements")
                seen.add(y)
                queue.append(y)
    return seen


def _target(pi: Coloring) -> int | None:
    best = None
    for c in pi.cell_ids():
        s = pi.cell_size[c]
        if s > 1 and (best is None or s < pi.cell_size[best]):
            best = c
    return best


def ir_solve(G: ColoredGraph, pi: Coloring | None = None) -> list[SparseAutomorphism]:
    """Generators of ``Aut(G, pi)`` by individualization-refinement.

    The first path always takes the smallest vertex of the smallest
    non-trivial cell.  Then, from the deepest level up, every vertex ``w`` of
    that level's target cell that is not yet known to share an orbit with the
    first path's choice gets its subtree searched for a leaf equivalent to the
    first leaf.  Nodes whose refinement trace differs from the first path at
    the same depth are pruned.
    """
    if pi is None:
        pi = Coloring.from_colors(G.colors)
    root, _ = refine_with_trace(G, pi)
    nodes = [root]
    cells: list[int] = []
    traces: list[list] = []
    while (c := _target(nodes[-1])) is not None:
        q = nodes[-1].copy()
        s = _individualize_inplace(q, min(q.cell(c)))
        q, tr = refine_with_trace(G, q, [s])
        cells.append(c)
        traces.append(tr)
        nodes.append(q)
    leaf = nodes[-1]
    orbits = OrbitPartition(G.n)
    gens: list[SparseAutomorphism] = []

    def leaf_map(other: Coloring) -> SparseAutomorphism | None:
        phi = SparseAutomorphism({leaf.perm[i]: other.perm[i] for i in range(G.n)})
        if not is_automorphism(G, phi):
            return None
        if any(pi.cell_of[v] != pi.cell_of[w] for v, w in phi.items()):
            return None
        return phi

    def search(node: Coloring, depth: int) -> SparseAutomorphism | None:
        if depth == len(cells):
            return leaf_map(node)
        c = cells[depth]
        for x in sorted(node.cell(c)):
            q = node.copy()
            s = _individualize_inplace(q, x)
            q = refine_against(G, q, [s], traces[depth])
            if q is None:
                continue
            phi = search(q, depth + 1)
            if phi is not None:
                return phi
        return None

    for level in range(len(cells) - 1, -1, -1):
        node, c = nodes[level], cells[level]
        v = min(node.cell(c))
        for w in sorted(node.cell(c)):
            if orbits.same(v, w):
                continue
            q = node.copy()
            s = _individualize_inplace(q, w)
            q = refine_against(G, q, [s], traces[level])
            if q is None:
                continue
            phi = search(q, level + 1)
            if phi is not None:
                gens.append(phi)
                orbits.add_automorphism(phi)
    return gens


def group_order(gens: Iterable, n: int, cap: int = 10**6) -> int:
    return len(group_closure(gens, n, cap))
