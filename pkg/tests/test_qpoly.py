"""Exact polynomial / rational-function layer.

Frozen small cases plus hypothesis property tests for the ring and field
axioms, canonical forms, and the q -> 1/q substitution.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gggr.qpoly import (
    ONE,
    Q,
    ZERO,
    PolyQ,
    RatFuncQ,
    mat_identity,
    mat_inverse,
    mat_mul,
    mat_transpose,
    poly_gcd,
)


small_ints = st.integers(min_value=-6, max_value=6)
polys = st.lists(small_ints, min_size=0, max_size=5).map(PolyQ.from_coeffs)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_construction_strips_trailing_zeros():
    assert PolyQ.from_coeffs([1, 2, 0, 0]) == PolyQ.from_coeffs([1, 2])
    assert PolyQ.from_coeffs([0]) == ZERO
    assert ZERO.degree == -1
    assert ONE.degree == 0
    assert Q.degree == 1


def test_arithmetic_small():
    p = (Q + 1) * (Q - 1)
    assert p == Q**2 - 1
    assert (Q**2 - 1).evaluate(3) == 8
    assert (Q - 1) ** 3 == Q**3 - 3 * Q**2 + 3 * Q - 1
    quotient, remainder = divmod(Q**2 - 1, Q - 1)
    assert quotient == Q + 1 and remainder == ZERO


def test_divmod_with_remainder():
    quotient, remainder = divmod(Q**3 + 2, Q**2 + 1)
    assert quotient * (Q**2 + 1) + remainder == Q**3 + 2
    assert remainder.degree < 2


def test_poly_gcd_monic():
    g = poly_gcd((Q**2 - 1) * (Q + 2), (Q - 1) * (Q + 3))
    assert g == Q - 1
    assert poly_gcd(ZERO, Q + 1) == Q + 1


def test_render():
    assert str(Q**3 - 2 * Q + 1) == "q^3 - 2*q + 1"
    assert str(ZERO) == "0"
    assert str(-Q) == "-q"
    assert str(PolyQ.from_coeffs([Fraction(1, 2)])) == "1/2"
    assert str(2 * Q**2) == "2*q^2"


def test_ratfunc_canonical():
    f = RatFuncQ.of(Q**2 - 1, Q - 1)
    assert f.is_polynomial()
    assert f.as_poly() == Q + 1
    g = RatFuncQ.of(2 * Q, 4 * Q**2)
    assert g.num == PolyQ.from_coeffs([Fraction(1, 2)])
    assert g.den == Q
    with pytest.raises(ZeroDivisionError):
        RatFuncQ.of(ONE, ZERO)


def test_ratfunc_arithmetic():
    f = RatFuncQ.of(ONE, Q - 1)
    g = RatFuncQ.of(ONE, Q + 1)
    assert f + g == RatFuncQ.of(2 * Q, Q**2 - 1)
    assert f * g == RatFuncQ.of(ONE, Q**2 - 1)
    assert f - f == RatFuncQ.zero()
    assert (f / g) == RatFuncQ.of(Q + 1, Q - 1)
    assert f**-2 == RatFuncQ.of((Q - 1) ** 2, ONE)


def test_subs_qinv():
    f = RatFuncQ.from_poly(Q**2 + Q)
    assert f.subs_qinv() == RatFuncQ.of(Q + 1, Q**2)
    g = RatFuncQ.of(Q - 1, Q + 1)
    assert g.subs_qinv() == RatFuncQ.of(1 - Q, 1 + Q)
    assert g.subs_qinv().subs_qinv() == g


def test_matrix_inverse_small():
    matrix = [
        [RatFuncQ.from_poly(Q), RatFuncQ.from_poly(ONE)],
        [RatFuncQ.from_poly(ONE), RatFuncQ.from_poly(ONE)],
    ]
    inverse = mat_inverse(matrix)
    assert mat_mul(matrix, inverse) == mat_identity(2)
    assert mat_mul(inverse, matrix) == mat_identity(2)
    assert mat_transpose(matrix) == matrix


@given(polys, polys, polys)
@settings(max_examples=80, deadline=None)
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@given(polys, nonzero_polys)
@settings(max_examples=80, deadline=None)
def test_poly_divmod_invariant(a, b):
    quotient, remainder = divmod(a, b)
    assert quotient * b + remainder == a
    assert remainder.is_zero() or remainder.degree < b.degree


@given(polys, nonzero_polys, polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_ratfunc_field_axioms(n1, d1, n2, d2):
    f = RatFuncQ.of(n1, d1)
    g = RatFuncQ.of(n2, d2)
    assert f + g == g + f
    assert f * g == g * f
    assert f - g == -(g - f)
    if not g.is_zero():
        assert (f / g) * g == f


@given(polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_subs_qinv_involution(n, d):
    f = RatFuncQ.of(n, d)
    assert f.subs_qinv().subs_qinv() == f


@given(polys, nonzero_polys)
@settings(max_examples=40, deadline=None)
def test_evaluation_is_homomorphism(n, d):
    f = RatFuncQ.of(n, d)
    point = Fraction(7, 2)
    if d.evaluate(point) != 0:
        expected = Fraction(n.evaluate(point)) / d.evaluate(point)
        assert f.evaluate(point) == expected
