"""Representation maps and lifting of reduced-graph automorphisms.

Every vertex that survives a reduction keeps a *string*: itself followed by
the removed vertices it stands for.  An automorphism of the reduced graph that
sends ``v`` to ``w`` is lifted by mapping the two strings onto each other
position by position.  Removed paths that depend on two endpoints (obfuscated
edge flips) are kept in separate *flip records* and routed by the images of
both endpoints.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from typing import Iterable, Sequence

from . import _ops
from .graph import VertexRenaming
from .perm import SparseAutomorphism


class LiftError(RuntimeError):
    """Raised when a representation map and an automorphism do not fit together."""


class RepresentationMap:
    """Strings of represented vertices plus flip records.

    Keys are vertex ids of the graph the map was started on.  A vertex that
    was never touched implicitly has the string ``[v]``, so a fresh map costs
    nothing.  ``flips[(a, b, tag)]`` (``a < b``) holds a removed path between
    the endpoints as a list of segments, one per path vertex ordered from
    ``a``; each segment is that path vertex's string.  ``tag`` tells apart
    paths of different patterns between the same endpoints; a lift only maps
    records with equal tags onto each other.  ``fixed`` collects removed
    vertices that nothing represents.
    """

    def __init__(self):
        self.strings: dict[int, list[int]] = {}
        self.removed: set[int] = set()
        self.fixed: set[int] = set()
        self.flips: dict[tuple, list[list[int]]] = {}
        self._flip_at: dict[int, list[tuple]] = defaultdict(list)
        self._flip_seq: dict[tuple, int] = {}
        self._stages = 0

    def string(self, v: int) -> list[int]:
        """``R(v)``; empty for removed vertices."""
        if v in self.removed:
            return []
        return self.strings.get(v) or [v]

    def _take(self, v: int) -> list[int]:
        if v in self.removed:
            raise LiftError(f"vertex {v} was already removed")
        self.removed.add(v)
        return self.strings.pop(v, None) or [v]

    def absorb(self, p: int, removed: Iterable[int]) -> None:
        """Append the strings of ``removed`` (in order) to ``p``'s string."""
        if p in self.removed:
            raise LiftError(f"vertex {p} was already removed")
        s = self.strings.get(p)
        if s is None:
            s = self.strings[p] = [p]
        for c in removed:
            s.extend(self._take(c))

    def drop(self, removed: Iterable[int]) -> None:
        """Remove vertices without representing them; lifts fix them."""
        for c in removed:
            self.fixed.update(self._take(c))

    def add_flip(self, a: int, b: int, path: Sequence[int], tag=0) -> None:
        """Remove the internal vertices ``path`` of a path from ``a`` to ``b``."""
        self._add_record(a, b, tag, [self._take(c) for c in path])

    def _add_record(self, a: int, b: int, tag, segs: list[list[int]]) -> None:
        if a > b:
            a, b = b, a
            segs = segs[::-1]
        key = (a, b, tag)
        if key in self.flips:
            raise LiftError(f"duplicate flip record for {key}")
        self.flips[key] = segs
        self._flip_seq[key] = len(self._flip_seq)
        self._flip_at[a].append(key)
        self._flip_at[b].append(key)

    def flips_at(self, v: int) -> list[tuple]:
        return self._flip_at.get(v, [])

    def flip_keys(self) -> list[tuple]:
        """Flip record keys in creation order."""
        return sorted(self._flip_seq, key=self._flip_seq.__getitem__)

    def is_identity(self) -> bool:
        return not self.removed and not self.strings

    def copy(self) -> RepresentationMap:
        out = RepresentationMap()
        out.strings = {v: s[:] for v, s in self.strings.items()}
        out.removed = set(self.removed)
        out.fixed = set(self.fixed)
        out._stages = self._stages
        for key in self.flip_keys():
            out._add_record(*key, [seg[:] for seg in self.flips[key]])
        return out

    def absorb_stage(self, renaming: VertexRenaming, R: RepresentationMap) -> None:
        """Fold in a map ``R`` made on the graph that ``renaming`` describes.

        ``renaming.backward`` sends that graph's ids to keys of ``self``.
        Strings of strings become concatenations, so lifting through the
        updated map equals lifting through ``self`` and then through ``R``.
        """
        b = renaming.backward

        def cat(s):
            out = []
            for x in s:
                out.extend(self._take(b[x]))
            return out

        for g in sorted(R.strings):
            s = R.strings[g]
            head = self.strings.get(b[g]) or [b[g]]
            self.strings[b[g]] = head + cat(s[1:])
        for x in sorted(R.fixed):
            self.fixed.update(self._take(b[x]))
        self._stages += 1
        for key in R.flip_keys():
            a, c, tag = key
            self._add_record(b[a], b[c], (self._stages, tag), [cat(seg) for seg in R.flips[key]])


def lift(phi: SparseAutomorphism, R: RepresentationMap, renaming: VertexRenaming | None = None) -> SparseAutomorphism:
    """Lift an automorphism of the reduced graph to the ids ``R`` is keyed by.

    ``renaming.backward`` maps reduced ids to keys of ``R`` (identity if
    omitted).  Work is proportional to the support of the result.
    """
    back = renaming.backward if renaming is not None else None
    img: dict[int, int] = {}
    work = 0
    for v, w in phi.items():
        a, b = (back[v], back[w]) if back is not None else (v, w)
        sa, sb = R.string(a), R.string(b)
        if not sa or not sb:
            raise LiftError(f"vertex {a if not sa else b} is not a remaining vertex")
        if len(sa) != len(sb):
            raise LiftError(f"strings of {a} and {b} differ in length")
        work += len(sa)
        for x, y in zip(sa, sb):
            img[x] = y
    if R.flips and img:
        seq = R._flip_seq
        heap: list[tuple[int, tuple]] = []
        for x in img:
            for key in R.flips_at(x):
                heap.append((-seq[key], key))
        heapq.heapify(heap)
        done = set()
        while heap:
            # later records first: their path vertices may be endpoints of older ones
            _, key = heapq.heappop(heap)
            if key in done:
                continue
            done.add(key)
            a, b, tag = key
            A, B = img.get(a, a), img.get(b, b)
            if (A, B) == (a, b):
                continue
            target = (A, B, tag) if A < B else (B, A, tag)
            src = R.flips[key]
            dst = R.flips.get(target)
            if dst is None or len(dst) != len(src):
                raise LiftError(f"flip record {key} has no counterpart {target}")
            if A > B:
                dst = dst[::-1]
            for seg_s, seg_d in zip(src, dst):
                if len(seg_s) != len(seg_d):
                    raise LiftError(f"segment shapes differ between {key} and {target}")
                work += len(seg_s)
                for x, y in zip(seg_s, seg_d):
                    if x != y and x not in img:
                        img[x] = y
                        for k2 in R.flips_at(x):
                            if k2 not in done:
                                heapq.heappush(heap, (-seq[k2], k2))
    _ops.add("lift", work)
    return SparseAutomorphism(img)


def flatten_chain(stages: Sequence[tuple[RepresentationMap, VertexRenaming]]) -> tuple[RepresentationMap, VertexRenaming]:
    """Collapse per-stage maps into one map over the first stage's ids.

    ``stages[i] = (R_i, r_i)``: ``R_i`` is keyed by the ids of the graph the
    stage reduced and ``r_i`` renames the stage's output graph back to those
    ids.  Returns the flattened map and the total renaming.
    """
    if not stages:
        raise ValueError("empty chain")
    R0, ren = stages[0]
    F = R0.copy()
    for R, r in stages[1:]:
        F.absorb_stage(ren, R)
        ren = ren.then(r)
    return F, ren


def lift_chain(phi: SparseAutomorphism, stages: Sequence[tuple[RepresentationMap, VertexRenaming]]) -> SparseAutomorphism:
    """Lift stage by stage, last stage first (reference for :func:`flatten_chain`)."""
    for R, r in reversed(stages):
        phi = lift(phi, R, r)
    return phi
