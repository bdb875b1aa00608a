"""Exact arithmetic and enumeration for finite commutative rings with identity.

Every element is an ``int`` index in ``range(ring.size)``; index 0 is the
additive zero and the integer order is the canonical enumeration order.
Base rings (``ZMod``, ``MonomialQuotient``, ``ProductRing``) keep full
addition and multiplication tables as numpy arrays, so row queries such as
"``a * y`` for every ``y``" are single gathers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

DEFAULT_SIZE_CAP = 4096

_BLOCK = 256


class ElementError(ValueError):
    """An element index outside ``range(ring.size)``."""


class SizeCapError(ValueError):
    """A ring would exceed the configured element cap."""

    def __init__(self, size, cap):
        super().__init__(f"ring has {size} elements, size cap is {cap}")
        self.size = size
        self.cap = cap


class FiniteRing:
    """Common interface of every finite ring in the package.

    Subclasses set ``size`` and ``one`` and implement ``add_row``,
    ``mul_row``, ``neg`` and ``label``.
    """

    size: int
    one: int
    zero = 0

    def __init__(self):
        self.cache = {}

    def __len__(self):
        return self.size

    def elements(self):
        return range(self.size)

    def check(self, a):
        if not 0 <= a < self.size:
            raise ElementError(f"element {a} out of range for a ring of size {self.size}")
        return int(a)

    def add(self, a, b):
        return int(self.add_row(self.check(a))[self.check(b)])

    def mul(self, a, b):
        return int(self.mul_row(self.check(a))[self.check(b)])

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def power(self, a, k):
        result = self.one
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def from_int(self, k):
        """The image of the integer ``k`` under ``Z -> R``."""
        base = self.one if k >= 0 else self.neg(self.one)
        out = self.zero
        step = base
        k = abs(k)
        while k:
            if k & 1:
                out = self.add(out, step)
            step = self.add(step, step)
            k >>= 1
        return out

    def add_row(self, a) -> np.ndarray:
        raise NotImplementedError

    def mul_row(self, a) -> np.ndarray:
        raise NotImplementedError

    def zero_product_mask(self, a) -> np.ndarray:
        """Boolean mask of the ``y`` with ``a * y == 0``."""
        return self.mul_row(a) == 0

    def label(self, a) -> str:
        return str(a)

    def labels(self, elements):
        return [self.label(a) for a in elements]


class TabulatedRing(FiniteRing):
    """A ring backed by explicit ``size x size`` tables."""

    def __init__(self, add_table, mul_table):
        super().__init__()
        self.add_table = add_table
        self.mul_table = mul_table
        self.size = add_table.shape[0]
        self.neg_table = np.argmax(add_table == 0, axis=1).astype(add_table.dtype)
        self.one = self._find_one()

    def _find_one(self):
        ident = np.arange(self.size)
        hits = np.flatnonzero((self.mul_table == ident[None, :]).all(axis=1))
        if len(hits) != 1:
            raise ValueError("ring has no multiplicative identity")
        return int(hits[0])

    def add(self, a, b):
        return int(self.add_table[self.check(a), self.check(b)])

    def mul(self, a, b):
        return int(self.mul_table[self.check(a), self.check(b)])

    def neg(self, a):
        return int(self.neg_table[self.check(a)])

    def add_row(self, a):
        return self.add_table[a]

    def mul_row(self, a):
        return self.mul_table[a]


def _index_dtype(size):
    return np.int16 if size <= np.iinfo(np.int16).max else np.int32


def _check_cap(size, cap):
    if cap is not None and size > cap:
        raise SizeCapError(size, cap)


class ZMod(TabulatedRing):
    """The residue ring Z/nZ; element ``k`` is the residue ``k``."""

    def __init__(self, n, size_cap=DEFAULT_SIZE_CAP):
        if n < 2:
            raise ValueError(f"modulus must be at least 2, got {n}")
        _check_cap(n, size_cap)
        self.n = n
        r = np.arange(n, dtype=np.int64)
        dtype = _index_dtype(n)
        super().__init__(
            (np.add.outer(r, r) % n).astype(dtype),
            (np.multiply.outer(r, r) % n).astype(dtype),
        )

    def __repr__(self):
        return f"ZMod({self.n})"


def standard_monomials(nvars, generators):
    """Exponent vectors divisible by no generator, in lexicographic order.

    Requires every variable to have a pure-power generator; the search box
    is bounded by those powers.
    """
    bounds = []
    for v in range(nvars):
        pure = [g[v] for g in generators
                if g[v] > 0 and all(e == 0 for k, e in enumerate(g) if k != v)]
        if not pure:
            raise ValueError(f"variable {v} has no pure-power generator")
        bounds.append(min(pure))
    return [m for m in itertools.product(*(range(b) for b in bounds))
            if not any(divides(g, m) for g in generators)]


def divides(g, m):
    return all(a <= b for a, b in zip(g, m))


class MonomialQuotient(TabulatedRing):
    """``Z_n[V1..Vk]`` modulo an ideal generated by monomials.

    Elements are coefficient vectors over the standard monomials (sorted
    lexicographically, so the constant monomial comes first) and are encoded
    in base ``n`` with the constant coefficient as the least significant
    digit. The identity therefore has index 1.
    """

    def __init__(self, modulus, variables, generators, size_cap=DEFAULT_SIZE_CAP):
        if modulus < 2:
            raise ValueError(f"coefficient modulus must be at least 2, got {modulus}")
        self.modulus = modulus
        self.variables = tuple(variables)
        self.generators = tuple(tuple(g) for g in generators)
        self.basis = standard_monomials(len(self.variables), self.generators)
        b = len(self.basis)
        size = modulus ** b
        _check_cap(size, size_cap)

        lookup = {m: k for k, m in enumerate(self.basis)}
        # basis product table: index of the product monomial, or -1 when it dies
        self.basis_product = np.full((b, b), -1, dtype=np.int64)
        for k, mk in enumerate(self.basis):
            for l, ml in enumerate(self.basis):
                prod = tuple(x + y for x, y in zip(mk, ml))
                self.basis_product[k, l] = lookup.get(prod, -1)

        self._weights = modulus ** np.arange(b, dtype=np.int64)
        coeffs = self.decode_all(size)
        dtype = _index_dtype(size)
        add_table = np.empty((size, size), dtype=dtype)
        mul_table = np.empty((size, size), dtype=dtype)
        pairs = [(k, l, int(t)) for k in range(b) for l in range(b)
                 if (t := self.basis_product[k, l]) >= 0]
        for start in range(0, size, _BLOCK):
            block = coeffs[start:start + _BLOCK]
            add_table[start:start + _BLOCK] = (
                ((block[:, None, :] + coeffs[None, :, :]) % modulus) @ self._weights)
            prod = np.zeros((len(block), size, b), dtype=np.int64)
            for k, l, t in pairs:
                prod[:, :, t] += block[:, None, k] * coeffs[None, :, l]
            mul_table[start:start + _BLOCK] = (prod % modulus) @ self._weights
        super().__init__(add_table, mul_table)

    def decode_all(self, size=None):
        size = self.modulus ** len(self.basis) if size is None else size
        idx = np.arange(size, dtype=np.int64)
        return (idx[:, None] // self._weights[None, :]) % self.modulus

    def coefficients(self, a):
        a = self.check(a)
        return [(a // int(w)) % self.modulus for w in self._weights]

    def encode(self, coefficients):
        return int(sum((c % self.modulus) * int(w)
                       for c, w in zip(coefficients, self._weights)))

    def monomial(self, exponents, coefficient=1):
        """Element for ``coefficient * V^exponents``; zero if the monomial dies."""
        try:
            k = self.basis.index(tuple(exponents))
        except ValueError:
            return self.zero
        coeffs = [0] * len(self.basis)
        coeffs[k] = coefficient
        return self.encode(coeffs)

    def variable(self, name):
        v = self.variables.index(name)
        return self.monomial(tuple(int(k == v) for k in range(len(self.variables))))

    def label(self, a):
        terms = []
        for c, m in reversed(list(zip(self.coefficients(a), self.basis))):
            if c == 0:
                continue
            mono = "*".join(name if e == 1 else f"{name}^{e}"
                            for name, e in zip(self.variables, m) if e)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return (f"MonomialQuotient({self.modulus}, {list(self.variables)}, "
                f"{[list(g) for g in self.generators]})")


class ProductRing(TabulatedRing):
    """Direct product; elements are tuples of factor elements encoded in
    mixed radix with the first factor most significant, so enumeration
    order is lexicographic in the tuples."""

    def __init__(self, factors, size_cap=DEFAULT_SIZE_CAP):
        if len(factors) < 2:
            raise ValueError("a product needs at least two factors")
        self.factors = tuple(factors)
        sizes = [f.size for f in self.factors]
        size = int(np.prod(sizes))
        _check_cap(size, size_cap)
        weights = []
        w = 1
        for s in reversed(sizes):
            weights.append(w)
            w *= s
        self._weights = tuple(reversed(weights))
        idx = np.arange(size, dtype=np.int64)
        digits = [(idx // w) % s for w, s in zip(self._weights, sizes)]
        dtype = _index_dtype(size)
        add_table = np.zeros((size, size), dtype=np.int64)
        mul_table = np.zeros((size, size), dtype=np.int64)
        for f, d, w in zip(self.factors, digits, self._weights):
            add_table += f.add_table[np.ix_(d, d)].astype(np.int64) * w
            mul_table += f.mul_table[np.ix_(d, d)].astype(np.int64) * w
        super().__init__(add_table.astype(dtype), mul_table.astype(dtype))

    def components(self, a):
        a = self.check(a)
        return tuple((a // w) % f.size for w, f in zip(self._weights, self.factors))

    def encode(self, components):
        if len(components) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} components, got {len(components)}")
        return sum(f.check(c) * w for c, f, w in zip(components, self.factors, self._weights))

    def label(self, a):
        return "(" + ", ".join(f.label(c) for f, c in zip(self.factors, self.components(a))) + ")"

    def __repr__(self):
        return f"ProductRing({list(self.factors)})"


@dataclass(frozen=True)
class PowerTrajectory:
    """Distinct nonzero powers ``x^1, x^2, ...`` in exponent order.

    ``powers[k]`` is ``x^(k+1)``. ``index`` is the nilpotency index, or
    ``None`` when the sequence cycles without reaching zero.
    """

    powers: tuple
    index: int | None

    @property
    def nilpotent(self):
        return self.index is not None


def pow_trajectory(ring, x):
    x = ring.check(x)
    if x == ring.zero:
        return PowerTrajectory((), 1)
    seen = set()
    powers = []
    p = x
    while True:
        if p == ring.zero:
            return PowerTrajectory(tuple(powers), len(powers) + 1)
        if p in seen:
            return PowerTrajectory(tuple(powers), None)
        seen.add(p)
        powers.append(p)
        p = ring.mul(p, x)


def nilpotency_index(ring, x):
    return pow_trajectory(ring, x).index


def is_integral_domain(ring):
    from zdlab.idealalg import zero_divisor_set
    return ring.size >= 2 and zero_divisor_set(ring) == {ring.zero}


def is_reduced(ring):
    from zdlab.idealalg import nilradical
    return len(nilradical(ring)) == 1


def is_z2xz2(ring):
    """True iff ``ring`` is isomorphic to Z2 x Z2.

    Among unital rings of order 4 the only reduced one with zero divisors
    is Z2 x Z2 (Z4 and Z2[X]/(X^2) are not reduced, GF(4) is a field).
    """
    return ring.size == 4 and is_reduced(ring) and not is_integral_domain(ring)
