"""A small DSL for finite commutative rings and ideal generators.

Ring grammar (whitespace-insensitive)::

    ring      := factor (('x' | '×') factor)*
    factor    := base | '(' ring ')'
    base      := 'Z' INT ['[' IDENT (',' IDENT)* ']' ['/' '(' [monomial (',' monomial)*] ')']]
    monomial  := IDENT ['^' INT] ('*' IDENT ['^' INT])*

Ideal generators are comma-separated expressions built from integers,
variables, ``+ - * ^``, parentheses and ``( , )`` tuples for product rings.

Errors carry 0-based byte offsets into the UTF-8 encoded input.
"""

from __future__ import annotations

from dataclasses import dataclass

from zdlab.ringkernel import (
    DEFAULT_SIZE_CAP,
    MonomialQuotient,
    ProductRing,
    ZMod,
)


class SpecSyntaxError(ValueError):
    def __init__(self, text, pos, expected=(), message=None):
        self.offset = len(text[:pos].encode("utf-8"))
        self.expected = frozenset(expected)
        if message is None:
            found = repr(text[pos]) if pos < len(text) else "end of input"
            message = f"expected one of {sorted(self.expected)}, found {found}"
        super().__init__(f"{message} at byte {self.offset}")


class InfiniteRingError(ValueError):
    def __init__(self, variable):
        super().__init__(f"variable {variable} is unbounded: add a pure power {variable}^k")
        self.variable = variable


class IdealSpecError(ValueError):
    pass


@dataclass(frozen=True)
class Modular:
    n: int


@dataclass(frozen=True)
class Quotient:
    modulus: int
    variables: tuple
    generators: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


# ideal expressions
@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Tup:
    items: tuple


@dataclass(frozen=True)
class IdealSpec:
    generators: tuple


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, expected, message=None, pos=None):
        return SpecSyntaxError(self.text, self.pos if pos is None else pos, expected, message)

    def accept(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch):
        if not self.accept(ch):
            raise self.error({ch})

    def integer(self):
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            raise self.error({"INT"})
        return int(self.text[start:self.pos]), start

    def ident(self):
        self.ws()
        start = self.pos
        if self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
        if start == self.pos:
            raise self.error({"IDENT"})
        return self.text[start:self.pos], start

    def at_end(self):
        return self.peek() == ""


def parse_ring_spec(text):
    """Parse ring DSL text into a ``Modular``/``Quotient``/``Product`` AST."""
    if not text.strip():
        raise SpecSyntaxError(text, len(text), {"Z", "("}, "empty ring specification")
    sc = _Scanner(text)
    ast = _ring(sc)
    if not sc.at_end():
        raise sc.error({"x", "end of input"})
    return ast


def _ring(sc):
    factors = [_factor(sc)]
    while True:
        ch = sc.peek()
        if ch in ("x", "×"):
            sc.pos += 1
            factors.append(_factor(sc))
        else:
            break
    return factors[0] if len(factors) == 1 else Product(tuple(factors))


def _factor(sc):
    if sc.accept("("):
        inner = _ring(sc)
        sc.expect(")")
        return inner
    if sc.peek() != "Z":
        raise sc.error({"Z", "("})
    sc.pos += 1
    n, at = sc.integer()
    if n < 2:
        raise sc.error({"INT >= 2"}, f"modulus must be at least 2, got {n}", pos=at)
    if not sc.accept("["):
        return Modular(n)
    variables = [_new_var(sc, [])]
    while sc.accept(","):
        variables.append(_new_var(sc, variables))
    sc.expect("]")
    gens = []
    if sc.accept("/"):
        sc.expect("(")
        if not sc.accept(")"):
            gens.append(_monomial(sc, variables))
            while sc.accept(","):
                gens.append(_monomial(sc, variables))
            sc.expect(")")
    return Quotient(n, tuple(variables), tuple(gens))


def _new_var(sc, seen):
    name, at = sc.ident()
    if name in seen:
        raise sc.error({"IDENT"}, f"duplicate variable {name}", pos=at)
    return name


def _monomial(sc, variables):
    exps = [0] * len(variables)
    start = sc.pos
    while True:
        name, at = sc.ident()
        if name not in variables:
            raise sc.error(set(variables), f"unknown variable {name}", pos=at)
        e = 1
        if sc.accept("^"):
            e, _ = sc.integer()
        exps[variables.index(name)] += e
        if not sc.accept("*"):
            break
    if not any(exps):
        sc.ws()
        raise sc.error({"IDENT"}, "monomial generator has zero exponent vector", pos=start)
    return tuple(exps)


def format_ring_spec(ast):
    """Canonical text for an AST; ``parse_ring_spec`` inverts it."""
    if isinstance(ast, Modular):
        return f"Z{ast.n}"
    if isinstance(ast, Quotient):
        head = f"Z{ast.modulus}[{','.join(ast.variables)}]"
        if not ast.generators:
            return head
        monos = []
        for g in ast.generators:
            monos.append("*".join(v if e == 1 else f"{v}^{e}"
                                  for v, e in zip(ast.variables, g) if e))
        return f"{head}/({', '.join(monos)})"
    return " x ".join(f"({format_ring_spec(f)})" if isinstance(f, Product) else format_ring_spec(f)
                      for f in ast.factors)


def validate_finiteness(ast, size_cap=DEFAULT_SIZE_CAP):
    """Build the ring an AST denotes, refusing quotients with a free variable."""
    if isinstance(ast, Modular):
        return ZMod(ast.n, size_cap=size_cap)
    if isinstance(ast, Quotient):
        for k, name in enumerate(ast.variables):
            if not any(g[k] > 0 and sum(g) == g[k] for g in ast.generators):
                raise InfiniteRingError(name)
        return MonomialQuotient(ast.modulus, ast.variables, ast.generators, size_cap=size_cap)
    return ProductRing([validate_finiteness(f, size_cap) for f in ast.factors], size_cap=size_cap)


def ring_from_spec(text, size_cap=DEFAULT_SIZE_CAP):
    return validate_finiteness(parse_ring_spec(text), size_cap=size_cap)


def parse_ideal_ast(text):
    sc = _Scanner(text)
    gens = []
    if not sc.at_end():
        gens.append(_expr(sc))
        while sc.accept(","):
            gens.append(_expr(sc))
        if not sc.at_end():
            raise sc.error({",", "+", "-", "*", "^", "end of input"})
    return IdealSpec(tuple(gens))


def _expr(sc):
    node = _term(sc)
    while sc.peek() in ("+", "-"):
        op = sc.text[sc.pos]
        sc.pos += 1
        node = BinOp(op, node, _term(sc))
    return node


def _term(sc):
    node = _unary(sc)
    while sc.accept("*"):
        node = BinOp("*", node, _unary(sc))
    return node


def _unary(sc):
    if sc.accept("-"):
        return Neg(_unary(sc))
    node = _atom(sc)
    if sc.accept("^"):
        e, _ = sc.integer()
        node = Pow(node, e)
    return node


def _atom(sc):
    ch = sc.peek()
    if ch.isdigit():
        return Num(sc.integer()[0])
    if ch.isalpha() or ch == "_":
        name, at = sc.ident()
        return Var(name, len(sc.text[:at].encode("utf-8")))
    if sc.accept("("):
        items = [_expr(sc)]
        while sc.accept(","):
            items.append(_expr(sc))
        sc.expect(")")
        return items[0] if len(items) == 1 else Tup(tuple(items))
    raise sc.error({"INT", "IDENT", "(", "-"})


def evaluate(expr, ring):
    """Evaluate an ideal expression to an element of ``ring``."""
    if isinstance(expr, Num):
        return ring.from_int(expr.value)
    if isinstance(expr, Var):
        if isinstance(ring, MonomialQuotient) and expr.name in ring.variables:
            return ring.variable(expr.name)
        raise IdealSpecError(f"unknown variable {expr.name} at byte {expr.offset}")
    if isinstance(expr, Tup):
        if not isinstance(ring, ProductRing):
            raise IdealSpecError(f"tuple of length {len(expr.items)} in a ring that is not a product")
        if len(expr.items) != len(ring.factors):
            raise IdealSpecError(
                f"tuple of length {len(expr.items)} in a product of {len(ring.factors)} factors")
        return ring.encode([evaluate(e, f) for e, f in zip(expr.items, ring.factors)])
    if isinstance(expr, Neg):
        return ring.neg(evaluate(expr.operand, ring))
    if isinstance(expr, Pow):
        return ring.power(evaluate(expr.base, ring), expr.exponent)
    left, right = evaluate(expr.left, ring), evaluate(expr.right, ring)
    if expr.op == "+":
        return ring.add(left, right)
    if expr.op == "-":
        return ring.sub(left, right)
    return ring.mul(left, right)


def parse_ideal_spec(text, ring):
    """Generator elements for ``text``, reduced into ``ring``."""
    return [evaluate(g, ring) for g in parse_ideal_ast(text).generators]
