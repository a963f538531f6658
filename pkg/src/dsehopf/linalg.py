"""Exact linear algebra over Q on sparse vectors (``key -> rational`` maps).

Vectors are cleared to integers and reduced fraction-free by the kernel
(compiled when available).  An :class:`Echelon` holds the integer reduced
row echelon form of a subspace over a fixed, sorted column set, so two
subspaces are equal iff their echelons are equal.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Hashable, Iterable, Mapping, Sequence

from ._backend import kernel


class NotInSpan(ValueError):
    pass


class Echelon:
    def __init__(self, columns: Iterable[Hashable]):
        self.columns = tuple(columns)
        self.index = {c: i for i, c in enumerate(self.columns)}
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _encode(self, vec: Mapping) -> tuple[list[int], int, dict]:
        den = 1
        for c in vec.values():
            d = Fraction(c).denominator
            if d != 1:
                den = lcm(den, d)
        ints = [0] * len(self.columns)
        outside = {}
        for key, c in vec.items():
            if not c:
                continue
            i = self.index.get(key)
            if i is None:
                outside[key] = Fraction(c)
            else:
                ints[i] = int(Fraction(c) * den)
        return ints, den, outside

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True when the rank grew."""
        ints, _, outside = self._encode(vec)
        if outside:
            raise KeyError(f"vector has keys outside the column set: {list(outside)[:3]}")
        return kernel.insert_row(self.rows, self.pivots, ints) >= 0

    def reduce(self, vec: Mapping) -> dict:
        """Remainder of ``vec`` modulo the span, supported off the pivots."""
        ints, den, outside = self._encode(vec)
        num, rden = kernel.reduce_vector(ints, self.rows, self.pivots)
        out = {self.columns[i]: Fraction(x, rden * den) for i, x in enumerate(num) if x}
        out.update(outside)
        return out

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list[dict]:
        """Rows normalized to pivot 1."""
        out = []
        for row, p in zip(self.rows, self.pivots):
            lead = row[p]
            out.append({self.columns[i]: Fraction(x, lead) for i, x in enumerate(row) if x})
        return out

    def signature(self) -> tuple:
        return (self.columns, tuple(map(tuple, self.rows)), tuple(self.pivots))

    def __eq__(self, other):
        if not isinstance(other, Echelon):
            return NotImplemented
        return self.signature() == other.signature()

    def __repr__(self):
        return f"Echelon(rank={self.rank}, columns={len(self.columns)})"


class CoordinateSystem:
    """Coordinates with respect to a list of vectors, by echelonizing ``[V | I]``."""

    def __init__(self, vectors: Sequence[Mapping], columns: Iterable[Hashable] | None = None):
        if columns is None:
            columns = sorted({k for v in vectors for k in v}, key=repr)
        self.size = len(vectors)
        self._slots = [("#coord", j) for j in range(self.size)]
        base = tuple(columns)
        self._slot_set = set(self._slots)
        self.echelon = Echelon(base + tuple(self._slots))
        for slot, v in zip(self._slots, vectors):
            aug = dict(v)
            aug[slot] = 1
            self.echelon.add(aug)
        nbase = len(base)
        self.independent = all(p < nbase for p in self.echelon.pivots)

    def solve(self, vec: Mapping) -> list[Fraction]:
        rem = self.echelon.reduce(vec)
        if any(k not in self._slot_set for k in rem):
            raise NotInSpan("vector is not in the span")
        return [-rem.get(slot, Fraction(0)) for slot in self._slots]
