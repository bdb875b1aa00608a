"""The amalgamated duplication R ⋈ I = {(r, r + i) : r in R, i in I}.

Element ``k`` of the duplication is the pair with ``r = k // |I|`` and
``i = I.elements[k % |I|]``, so pairs are enumerated by (r, i) index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from zdlab.idealalg import nilradical, zero_divisor_mask
from zdlab.ringkernel import DEFAULT_SIZE_CAP, FiniteRing, SizeCapError


class ClosureError(AssertionError):
    """The pair set failed the subring check (a kernel bug, not user error)."""


class AmalgamRing(FiniteRing):

    def __init__(self, base, ideal, size_cap=DEFAULT_SIZE_CAP):
        super().__init__()
        if ideal.ring is not base:
            raise ValueError("ideal belongs to a different ring")
        self.base = base
        self.ideal = ideal
        self.m = len(ideal)
        self.size = base.size * self.m
        if size_cap is not None and self.size > size_cap:
            raise SizeCapError(self.size, size_cap)

        # position of each base element inside I, -1 outside
        self.ideal_pos = np.full(base.size, -1, dtype=np.int64)
        self.ideal_pos[list(ideal.elements)] = np.arange(self.m)
        idx = np.arange(self.size, dtype=np.int64)
        ideal_elems = np.asarray(ideal.elements, dtype=np.int64)
        self.first = idx // self.m
        self.second = np.asarray(base.add_table, dtype=np.int64)[
            self.first, ideal_elems[idx % self.m]]
        self._neg_base = np.asarray(base.neg_table, dtype=np.int64)
        self._add_base = np.asarray(base.add_table, dtype=np.int64)
        self._mul_base = np.asarray(base.mul_table, dtype=np.int64)
        self.one = self.index_of(base.one, base.one)

    def pair(self, k):
        k = self.check(k)
        return int(self.first[k]), int(self.second[k])

    def index_of(self, r, s):
        """Index of the pair ``(r, s)``; raises if ``s - r`` is not in I."""
        p = int(self.ideal_pos[self.base.sub(s, r)])
        if p < 0:
            raise ValueError(f"({r}, {s}) is not in R ⋈ I")
        return r * self.m + p

    def _encode(self, f, s):
        pos = self.ideal_pos[self._add_base[s, self._neg_base[f]]]
        if (pos < 0).any():
            raise ClosureError("pair result left R ⋈ I")
        return f * self.m + pos

    def add_row(self, a):
        return self._encode(self._add_base[self.first[a], self.first],
                            self._add_base[self.second[a], self.second])

    def mul_row(self, a):
        return self._encode(self._mul_base[self.first[a], self.first],
                            self._mul_base[self.second[a], self.second])

    def zero_product_mask(self, a):
        return ((self._mul_base[self.first[a], self.first] == 0)
                & (self._mul_base[self.second[a], self.second] == 0))

    def _scalar(self, table, a, b):
        a, b = self.check(a), self.check(b)
        f = int(table[self.first[a], self.first[b]])
        s = int(table[self.second[a], self.second[b]])
        p = int(self.ideal_pos[self._add_base[s, self._neg_base[f]]])
        if p < 0:
            raise ClosureError("pair result left R ⋈ I")
        return f * self.m + p

    def add(self, a, b):
        return self._scalar(self._add_base, a, b)

    def mul(self, a, b):
        return self._scalar(self._mul_base, a, b)

    def neg(self, a):
        r, s = self.pair(a)
        return self.index_of(self.base.neg(r), self.base.neg(s))

    def label(self, a):
        r, s = self.pair(a)
        return f"({self.base.label(r)}, {self.base.label(s)})"

    def verify_subring(self):
        """Exhaustive closure of the pair set under + and *."""
        for a in range(self.size):
            self.add_row(a)
            self.mul_row(a)
        if self.pair(self.zero) != (0, 0) or self.pair(self.one) != (self.base.one, self.base.one):
            raise ClosureError("zero or identity misplaced")

    def __repr__(self):
        return f"AmalgamRing({self.base!r}, |I|={self.m})"


def build_amalgamation(ring, ideal, size_cap=DEFAULT_SIZE_CAP, verify=True):
    dup = AmalgamRing(ring, ideal, size_cap=size_cap)
    if verify:
        dup.verify_subring()
    return dup


@dataclass(frozen=True)
class TPartition:
    """The four-set covering of Z(R ⋈ I). The sets may overlap."""

    t1: frozenset
    t2: frozenset
    t3: frozenset
    t4: frozenset

    @property
    def union(self):
        return self.t1 | self.t2 | self.t3 | self.t4

    def sizes(self):
        return {"T1": len(self.t1), "T2": len(self.t2), "T3": len(self.t3), "T4": len(self.t4)}


def t_partition(dup):
    base, ideal = dup.base, dup.ideal
    zr = zero_divisor_mask(base)
    first, second = dup.first, dup.second
    in_ideal_first = dup.ideal_pos[first] >= 0

    t1 = (first == 0) & in_ideal_first
    t2 = (second == 0) & in_ideal_first
    t3 = zr[first] & (first != 0)
    # j (r + i) = 0 for some nonzero j in I
    nonzero_ideal = [j for j in ideal.elements if j != base.zero]
    killed = np.zeros(base.size, dtype=bool)
    for j in nonzero_ideal:
        killed |= base.mul_row(j) == 0
    t4 = ~zr[first] & killed[second]

    def as_set(mask):
        return frozenset(int(k) for k in np.flatnonzero(mask))

    return TPartition(as_set(t1), as_set(t2), as_set(t3), as_set(t4))


def componentwise_nilradical(dup):
    """Nil(R ⋈ I) read off componentwise: pairs with both entries in Nil(R)."""
    nil = nilradical(dup.base).mask
    return frozenset(int(k) for k in np.flatnonzero(nil[dup.first] & nil[dup.second]))
