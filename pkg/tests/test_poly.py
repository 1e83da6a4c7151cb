from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mtutte.poly import (
    ONE,
    ZERO,
    Polynomial,
    canonical_text,
    evaluate,
    parse,
    partial_derivative,
    substitute,
    u,
    v,
    x,
    y,
    z,
)

T_M1 = x**2 + x * y + y**2 + x + y
T_P2 = (x**2 + 3 * x + y + 3) * z**2 + (2 * x + 2 * y + 5) * z + y + 2


def test_difference_of_squares():
    assert (x + 1) * (x - 1) == x**2 - 1


def test_self_cancellation_is_zero():
    diff = T_M1 - T_M1
    assert diff.is_zero()
    assert diff.terms == {}
    assert canonical_text(diff) == "0"


def test_shifted_m1_coefficients_count_sixteen_subsets():
    xs, ys = x + u, y + v
    total = xs**2 + xs * ys + ys**2 + xs + ys
    assert total == T_M1.subs({"x": xs, "y": ys})
    # (x+u)^2, (x+u)(y+v), (y+v)^2, x+u, y+v give 3 + 4 + 3 + 2 + 2 exponent vectors
    assert len(total.terms) == 14
    assert sum(total.terms.values()) == 16
    assert total.evaluate({"x": 1, "u": 1, "y": 1, "v": 1}) == 16


def test_no_zero_coefficients_stored():
    p = Polynomial({(1, 0, 0, 0, 0): 1, (0, 0, 1, 0, 0): 0})
    assert p.terms == {(1, 0, 0, 0, 0): Fraction(1)}
    with pytest.raises(ValueError):
        Polynomial({(1, 0, 0, 0): 1})
    with pytest.raises(ValueError):
        Polynomial({(-1, 0, 0, 0, 0): 1})


def test_partial_derivatives_of_m1():
    assert partial_derivative(T_M1, "x") == 2 * x + y + 1
    assert partial_derivative(T_M1, "y") == x + 2 * y + 1
    assert partial_derivative(Polynomial.const(7), "x").is_zero()
    assert partial_derivative(T_M1, "x", 3).is_zero()
    assert partial_derivative(T_M1, "x", 0) == T_M1
    with pytest.raises(ValueError):
        partial_derivative(T_M1, "w")


def test_substitute_family_one_term():
    term = u**2  # row with cr=0, iota=2 under the [[a,b,c,d]] term basis x^cr u^iota y^nl v^eps
    out = substitute(term, {"x": x - 1, "u": ONE, "y": y - 1, "v": ONE})
    assert out == ONE
    out = substitute(x**2, {"x": x - 1, "u": ONE, "y": y - 1, "v": ONE})
    assert out == (x - 1) ** 2


def test_substitute_identity_and_halves():
    assert substitute(T_P2, {"x": x}) == T_P2
    halves = {"x": x / 2, "u": x / 2, "y": y / 2, "v": y / 2}
    assert substitute(x * u, halves) == Polynomial.monomial(Fraction(1, 4), x=2)
    with pytest.raises(ValueError):
        substitute(x, {"w": y})


def test_substitution_is_simultaneous():
    assert substitute(x + 2 * y, {"x": y, "y": x}) == y + 2 * x


def test_evaluate_examples():
    assert evaluate(T_M1, {"x": 2, "y": 2}) == 16
    assert evaluate(T_P2, {"x": 0, "y": 0, "z": 1}) == 10
    assert evaluate(T_P2, {"x": 0, "y": 0, "z": 0}) == T_P2.constant_term() == 2
    assert evaluate(x / 3, {"x": Fraction(1, 2)}) == Fraction(1, 6)


def test_evaluate_names_unbound_variable():
    with pytest.raises(KeyError, match="'z'"):
        evaluate(T_P2, {"x": 1, "y": 1})


def test_canonical_text_examples():
    assert canonical_text(T_M1) == "x^2 + x*y + y^2 + x + y"
    assert canonical_text(ZERO) == "0"
    assert canonical_text(x / 2) == "1/2*x"
    assert canonical_text(-x + 1) == "-x + 1"
    assert canonical_text(T_P2) == "x^2*z^2 + 3*x*z^2 + y*z^2 + 2*x*z + 2*y*z + 3*z^2 + y + 5*z + 2"
    assert canonical_text(Polynomial.const(Fraction(-3, 4))) == "-3/4"


def test_parse_tolerates_whitespace():
    assert parse(" x ^ 2+x * y  -  1/2 * z ") == x**2 + x * y - z / 2
    assert parse("0") == ZERO
    for bad in ("", "x +", "x y", "2**x", "q"):
        with pytest.raises(ValueError):
            parse(bad)


def test_scalar_division_only():
    assert (4 * x) / 2 == 2 * x
    with pytest.raises(ZeroDivisionError):
        x / 0
    with pytest.raises(ZeroDivisionError):
        x / y


# -- properties --------------------------------------------------------------

small_coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exponent = st.tuples(*[st.integers(0, 3)] * 5)
polys = st.dictionaries(exponent, small_coeff, max_size=5).map(Polynomial)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a and a + ZERO == a


@settings(max_examples=60, deadline=None)
@given(polys, st.integers(0, 3), st.integers(0, 3))
def test_partials_commute(p, i, j):
    assert p.diff("x", i).diff("y", j) == p.diff("y", j).diff("x", i)


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.just(0), st.integers(0, 3), st.just(0), st.integers(0, 2)), small_coeff, max_size=5).map(Polynomial))
def test_taylor_identity(p):
    shifted = p.subs({"x": x + u, "y": y + v})
    for i in range(4):
        for j in range(4):
            want = p.diff("x", i).diff("y", j) / (factorial(i) * factorial(j))
            assert shifted.collect(u=i, v=j) == want


@settings(max_examples=80, deadline=None)
@given(polys)
def test_parse_round_trip(p):
    assert parse(canonical_text(p)) == p
    assert hash(parse(str(p))) == hash(p)
