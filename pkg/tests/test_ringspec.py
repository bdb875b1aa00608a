import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_standard_monomials
from zdlab.ringkernel import MonomialQuotient, ProductRing, ZMod, standard_monomials
from zdlab.ringspec import (
    IdealSpecError,
    InfiniteRingError,
    Modular,
    Product,
    Quotient,
    SpecSyntaxError,
    format_ring_spec,
    parse_ideal_spec,
    parse_ring_spec,
    ring_from_spec,
    validate_finiteness,
)


def test_modular():
    assert parse_ring_spec("Z8") == Modular(8)


def test_quotient():
    assert parse_ring_spec("Z2[X,Y]/(X^3, X^2*Y, Y^2)") == Quotient(
        2, ("X", "Y"), ((3, 0), (2, 1), (0, 2)))


def test_product():
    assert parse_ring_spec("Z3 x Z3") == Product((Modular(3), Modular(3)))


@pytest.mark.parametrize("text, expected", [
    ("  Z 8 ", Modular(8)),
    ("Z3xZ3", Product((Modular(3), Modular(3)))),
    ("Z2 × Z3", Product((Modular(2), Modular(3)))),
    ("(Z2 x Z3) x Z5", Product((Product((Modular(2), Modular(3))), Modular(5)))),
    ("(Z7)", Modular(7)),
    ("Z2[X]/(X*X*X)", Quotient(2, ("X",), ((3,),))),
    ("Z2[X]", Quotient(2, ("X",), ())),
    ("Z2[x]/(x^2) x Z3", Product((Quotient(2, ("x",), ((2,),)), Modular(3)))),
])
def test_grammar_variants(text, expected):
    assert parse_ring_spec(text) == expected


@pytest.mark.parametrize("text, offset", [
    ("Z1", 1),
    ("Z", 1),
    ("Q5", 0),
    ("Z8 Z9", 3),
    ("Z2[X]/(Y^2)", 7),
    ("Z2[X,X]/(X^2)", 5),
    ("Z2[X]/(X^0)", 7),
    ("Z3 x", 4),
    ("(Z3", 3),
    ("", 0),
    ("Z×Z", 1),
])
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(SpecSyntaxError) as err:
        parse_ring_spec(text)
    assert err.value.offset == offset


def test_offsets_are_bytes():
    # '×' is two bytes in UTF-8
    with pytest.raises(SpecSyntaxError) as err:
        parse_ring_spec("Z2 × Q")
    assert err.value.offset == 6
    assert "Z" in err.value.expected


def test_unbounded_variable_rejected():
    with pytest.raises(InfiniteRingError) as err:
        validate_finiteness(Quotient(2, ("X", "Y"), ((3, 0), (2, 1))))
    assert err.value.variable == "Y"


def test_validate_modular():
    ring = validate_finiteness(Modular(12))
    assert isinstance(ring, ZMod) and ring.size == 12


def test_validate_quotient_basis():
    ring = validate_finiteness(Quotient(2, ("X", "Y"), ((3, 0), (2, 1), (0, 2))))
    assert isinstance(ring, MonomialQuotient)
    # 1, Y, X, XY, X^2
    assert ring.basis == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]
    assert ring.size == 32


def test_validate_product():
    ring = ring_from_spec("Z2 x Z3 x Z5")
    assert isinstance(ring, ProductRing) and ring.size == 30


def test_ideal_spec_integer():
    assert parse_ideal_spec("4", ring_from_spec("Z8")) == [4]
    assert parse_ideal_spec("12, -1", ring_from_spec("Z8")) == [4, 7]


def test_ideal_spec_variables():
    ring = ring_from_spec("Z2[X,Y]/(X^3, X^2*Y, Y^2)")
    x, y = parse_ideal_spec("X, Y", ring)
    assert x == ring.variable("X") and y == ring.variable("Y")
    assert ring.label(x) == "X" and ring.label(y) == "Y"
    # X * X*Y = X^2*Y dies
    assert parse_ideal_spec("X*(X*Y)", ring) == [0]
    assert ring.label(parse_ideal_spec("(X+Y)^2 + X", ring)[0]) == "X^2 + X"


def test_ideal_spec_zero_everywhere():
    for text in ("Z5", "Z2[X]/(X^2)", "Z2 x Z3"):
        assert parse_ideal_spec("0", ring_from_spec(text)) == [0]
    assert parse_ideal_spec("", ring_from_spec("Z5")) == []


def test_ideal_spec_tuples():
    ring = ring_from_spec("Z2 x Z3")
    (g,) = parse_ideal_spec("(1, 2)", ring)
    assert ring.components(g) == (1, 2)
    nested = ring_from_spec("(Z2 x Z2) x Z3")
    (h,) = parse_ideal_spec("((1, 0), 2)", nested)
    assert nested.label(h) == "((1, 0), 2)"


@pytest.mark.parametrize("ring_text, ideal_text", [
    ("Z8", "X"),
    ("Z2[X]/(X^2)", "Y"),
    ("Z8", "(1, 2)"),
    ("Z2 x Z3", "(1, 2, 3)"),
])
def test_ideal_spec_shape_errors(ring_text, ideal_text):
    with pytest.raises(IdealSpecError):
        parse_ideal_spec(ideal_text, ring_from_spec(ring_text))


def test_ideal_spec_syntax_error():
    with pytest.raises(SpecSyntaxError) as err:
        parse_ideal_spec("1 +", ring_from_spec("Z5"))
    assert err.value.offset == 3


# --- properties ------------------------------------------------------------

VARS = ["X", "Y", "Z", "W"]


@st.composite
def ring_asts(draw, depth=2):
    kind = draw(st.sampled_from(["modular", "quotient", "product"] if depth else ["modular", "quotient"]))
    if kind == "modular":
        return Modular(draw(st.integers(2, 40)))
    if kind == "quotient":
        k = draw(st.integers(1, 3))
        gens = draw(st.lists(
            st.tuples(*[st.integers(0, 3)] * k).filter(any), max_size=4))
        return Quotient(draw(st.integers(2, 5)), tuple(VARS[:k]), tuple(gens))
    return Product(tuple(draw(st.lists(ring_asts(depth=depth - 1), min_size=2, max_size=3))))


@given(ring_asts())
def test_round_trip(ast):
    assert parse_ring_spec(format_ring_spec(ast)) == ast


def _has_pure_powers(k, gens):
    return all(any(g[v] > 0 and all(g[w] == 0 for w in range(k) if w != v) for g in gens)
               for v in range(k))


@settings(max_examples=150)
@given(st.integers(1, 3).flatmap(lambda k: st.tuples(
    st.just(k), st.lists(st.tuples(*[st.integers(0, 3)] * k).filter(any), max_size=5))))
def test_finiteness_iff_pure_powers(case):
    k, gens = case
    ast = Quotient(2, tuple(VARS[:k]), tuple(gens))
    if _has_pure_powers(k, gens):
        basis = standard_monomials(k, gens)
        assert basis == brute_standard_monomials(k, gens)
        if len(basis) <= 8:
            assert validate_finiteness(ast).size == 2 ** len(basis)
    else:
        with pytest.raises(InfiniteRingError):
            validate_finiteness(ast)


def test_standard_count_product_formula_for_pure_powers():
    for bounds in itertools.product(range(1, 4), repeat=2):
        gens = ((bounds[0], 0), (0, bounds[1]))
        ring = validate_finiteness(Quotient(2, ("X", "Y"), gens))
        assert len(ring.basis) == bounds[0] * bounds[1]
