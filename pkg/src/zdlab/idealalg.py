"""Ideals, annihilators, radicals and zero divisors of finite rings.

Ideals are materialized as sorted element tuples; results that every
theorem check needs (Z(R), Nil(R)) are memoized on the ring's ``cache``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from zdlab.ringkernel import pow_trajectory


@dataclass(frozen=True, eq=False)
class IdealSet:
    ring: object
    generators: tuple
    elements: tuple
    mask: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return bool(self.mask[a])

    def __eq__(self, other):
        if not isinstance(other, IdealSet):
            return NotImplemented
        return self.ring is other.ring and self.elements == other.elements

    __hash__ = None

    def issubset(self, other):
        return bool(np.all(other.mask[list(self.elements)]))

    @property
    def is_zero(self):
        return self.elements == (self.ring.zero,)

    def labels(self):
        return self.ring.labels(self.elements)


def _from_mask(ring, mask, generators=()):
    return IdealSet(ring, tuple(int(g) for g in generators),
                    tuple(int(a) for a in np.flatnonzero(mask)), mask)


def _memo(ring, key, compute):
    try:
        return ring.cache[key]
    except KeyError:
        value = ring.cache[key] = compute()
        return value


def is_ideal(ring, elements):
    """Exhaustive closure test: contains 0, closed under + and under R*."""
    mask = np.zeros(ring.size, dtype=bool)
    mask[list(elements)] = True
    if not mask[ring.zero]:
        return False
    for a in np.flatnonzero(mask):
        if not mask[ring.add_row(a)[mask]].all():
            return False
        if not mask[ring.mul_row(a)].all():
            return False
    return True


def _verified(ring, mask, generators=()):
    ideal = _from_mask(ring, mask, generators)
    if not is_ideal(ring, ideal.elements):
        raise AssertionError("computed set is not closed as an ideal")
    return ideal


def ideal_generate(ring, gens):
    """Least ideal containing ``gens``, by fixpoint closure."""
    gens = [ring.check(g) for g in gens]
    mask = np.zeros(ring.size, dtype=bool)
    mask[ring.zero] = True
    mask[gens] = True
    frontier = np.flatnonzero(mask)
    while len(frontier):
        new = np.zeros(ring.size, dtype=bool)
        for a in frontier:
            new[ring.mul_row(a)] = True
            new[ring.add_row(a)[mask]] = True
        new &= ~mask
        mask |= new
        frontier = np.flatnonzero(new)
    return _from_mask(ring, mask, gens)


def whole_ring(ring):
    return _from_mask(ring, np.ones(ring.size, dtype=bool), [ring.one])


def zero_ideal(ring):
    mask = np.zeros(ring.size, dtype=bool)
    mask[ring.zero] = True
    return _from_mask(ring, mask)


def zero_divisor_mask(ring):
    def compute():
        mask = np.zeros(ring.size, dtype=bool)
        for a in range(ring.size):
            hits = ring.zero_product_mask(a)
            hits[ring.zero] = False
            mask[a] = hits.any()
        mask.flags.writeable = False
        return mask
    return _memo(ring, "zero_divisors", compute)


def zero_divisor_set(ring):
    """Z(R) = {x : xy = 0 for some y != 0}; contains 0 for |R| >= 2."""
    return frozenset(int(a) for a in np.flatnonzero(zero_divisor_mask(ring)))


def nonzero_zero_divisors(ring):
    """Z(R)* in canonical order: the vertex set of both graphs."""
    mask = zero_divisor_mask(ring).copy()
    mask[ring.zero] = False
    return tuple(int(a) for a in np.flatnonzero(mask))


def ideal_radical(ring, ideal):
    """sqrt(I) = {x : x^k in I for some k >= 1}."""
    mask = np.zeros(ring.size, dtype=bool)
    for x in range(ring.size):
        traj = pow_trajectory(ring, x)
        mask[x] = traj.nilpotent or any(p in ideal for p in traj.powers)
    return _verified(ring, mask)


def nilradical(ring):
    def compute():
        mask = np.zeros(ring.size, dtype=bool)
        for x in range(ring.size):
            mask[x] = pow_trajectory(ring, x).nilpotent
        return _verified(ring, mask)
    return _memo(ring, "nilradical", compute)


def annihilator(ring, x):
    return _verified(ring, ring.zero_product_mask(ring.check(x)).copy())


def annihilator_of_set(ring, subset):
    """Intersection of Ann(s) over ``subset``; the whole ring when empty."""
    mask = np.ones(ring.size, dtype=bool)
    for s in subset:
        mask &= ring.zero_product_mask(ring.check(s))
    return _verified(ring, mask)


def coincidence_criterion(ring):
    """Ring-level criterion for the classic and extended zero-divisor graphs
    to coincide: every nonzero nilpotent has index 2, and Ann(x) = Ann(x^2)
    for every non-nilpotent zero divisor x."""
    nil = nilradical(ring)
    for x in nil:
        if x != ring.zero and pow_trajectory(ring, x).index != 2:
            return False
    zd = zero_divisor_mask(ring)
    for x in np.flatnonzero(zd & ~nil.mask):
        x = int(x)
        if not np.array_equal(ring.zero_product_mask(x),
                              ring.zero_product_mask(ring.mul(x, x))):
            return False
    return True
