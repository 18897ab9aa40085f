"""Permutations stored by their support."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from . import _ops


class SparseAutomorphism:
    """A permutation that only records the points it moves.

    Storage and iteration cost are proportional to the support; points that
    are not stored are fixed.  Instances are immutable and hashable.
    """

    __slots__ = ("_map", "_hash")

    def __init__(self, mapping: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        moved = {v: w for v, w in items if v != w}
        if set(moved.values()) != moved.keys():
            raise ValueError("mapping is not a permutation of its support")
        self._map = {v: moved[v] for v in sorted(moved)}
        self._hash = None

    @classmethod
    def identity(cls) -> SparseAutomorphism:
        return cls()

    @classmethod
    def from_array(cls, images: Sequence[int]) -> SparseAutomorphism:
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a bijection on range(n)")
        return cls((v, w) for v, w in enumerate(images) if v != w)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> SparseAutomorphism:
        m: dict[int, int] = {}
        for cyc in cycles:
            for i, v in enumerate(cyc):
                if v in m:
                    raise ValueError(f"point {v} appears twice")
                m[v] = cyc[(i + 1) % len(cyc)]
        return cls(m)

    def __call__(self, v: int) -> int:
        return self._map.get(v, v)

    def items(self):
        return self._map.items()

    @property
    def support(self) -> list[int]:
        return list(self._map)

    def __len__(self) -> int:
        return len(self._map)

    def __bool__(self) -> bool:
        return bool(self._map)

    @property
    def is_identity(self) -> bool:
        return not self._map

    def inverse(self) -> SparseAutomorphism:
        return SparseAutomorphism({w: v for v, w in self._map.items()})

    def to_array(self, n: int) -> list[int]:
        out = list(range(n))
        for v, w in self._map.items():
            out[v] = w
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its minimum, ordered by minimum."""
        seen = set()
        out = []
        for v in self._map:  # keys are sorted, so each cycle is met at its minimum
            if v in seen:
                continue
            cyc = [v]
            seen.add(v)
            w = self._map[v]
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = self._map[w]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, SparseAutomorphism):
            return self._map == other._map
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._map.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._map:
            return "SparseAutomorphism(())"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"SparseAutomorphism({body})"


def compose(phi1: SparseAutomorphism, phi2: SparseAutomorphism) -> SparseAutomorphism:
    """Return ``phi1 ∘ phi2`` (apply ``phi2`` first).

    Only the two supports are visited.
    """
    _ops.add("compose", len(phi1) + len(phi2))
    out = {}
    for v, w in phi2.items():
        out[v] = phi1(w)
    for v, w in phi1.items():
        if v not in phi2._map:
            out[v] = w
    return SparseAutomorphism(out)
