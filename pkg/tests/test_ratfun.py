"""Kernel tests: polynomials, rational functions, Wronskians, integration."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from painleve4.errors import DivisionByZero, NonRationalIntegral
from painleve4.ratfun import (ONE, Poly, RatFun, X, ZERO, integrate,
                              log_derivative, poly_gcd, wronskian)


def P(*coeffs):
    return Poly(coeffs)


# -- polynomial basics -----------------------------------------------------------

def test_canonical_form():
    assert P(1, 2, 0, 0) == P(1, 2)
    assert P().degree == -1
    assert P().is_zero
    assert P(0, 0).is_zero
    assert (X ** 3).degree == 3


def test_poly_arithmetic():
    p = 4 * X ** 2 - 2
    q = 2 * X
    assert p + q == P(-2, 2, 4)
    assert p - p == ZERO
    assert p * q == P(0, -4, 0, 8)
    assert (X + 1) * (X - 1) == X ** 2 - 1


def test_poly_divmod():
    q, r = divmod(X ** 2 - 1, X - 1)
    assert q == X + 1 and r.is_zero
    q, r = divmod(X ** 3 + 2, X + 1)
    assert q * (X + 1) + r == X ** 3 + 2
    with pytest.raises(DivisionByZero):
        divmod(X, ZERO)


def test_poly_derivative_examples():
    assert P(1).derivative() == ZERO
    assert (2 * X).derivative() == P(2)
    assert (4 * X ** 2 - 2).derivative() == 8 * X


def test_poly_evaluation_and_gcd():
    p = (X - 2) * (X + 3)
    assert p(2) == 0 and p(0) == -6
    assert poly_gcd(X ** 2 - 1, X - 1) == X - 1
    assert poly_gcd(X ** 2 + 1, X) == ONE


def test_json_round_trip():
    p = Poly([F(8, 27), 0, F(-4, 3)])
    assert Poly.from_json(p.to_json()) == p
    f = RatFun(4 * X ** 2 - 2, 3 * X)
    assert RatFun.from_json(f.to_json()) == f
    assert f.to_json() == {"num": ["-2/3", "0", "4/3"], "den": ["0", "1"]}


# -- rational functions ------------------------------------------------------------

def test_normalization_monic_den():
    f = RatFun(X ** 2 - 1, X - 1)
    assert f == RatFun(X + 1)
    g = RatFun(2 * X, 2 * X ** 2 + 4)
    assert g.den.lc == 1
    assert g == RatFun(X, X ** 2 + 2)


def test_field_arithmetic():
    one_over_x = RatFun(ONE, X)
    assert one_over_x + (-one_over_x) == RatFun(0)
    assert RatFun(X, X + 1) * RatFun(X + 1, X) == RatFun(1)
    with pytest.raises(DivisionByZero):
        RatFun(1) / RatFun(0)
    with pytest.raises(DivisionByZero):
        RatFun(X, ZERO)


def test_log_derivative_examples():
    assert log_derivative(RatFun(5)) == RatFun(0)
    assert log_derivative(RatFun(X)) == RatFun(ONE, X)
    assert log_derivative(RatFun(X ** 2 + 1)) == RatFun(2 * X, X ** 2 + 1)
    with pytest.raises(DivisionByZero):
        log_derivative(RatFun(0))


def test_ratfun_derivative():
    f = RatFun(ONE, X)
    assert f.derivative() == RatFun(P(-1), X ** 2)
    assert RatFun(X ** 3).derivative() == RatFun(3 * X ** 2)


# -- Wronskians -----------------------------------------------------------------

def test_wronskian_single_entry():
    assert wronskian([2 * X]) == 2 * X


def test_wronskian_frozen_2x2():
    # det [[2x, 1], [2, 0]] = -2, expanded by hand
    assert wronskian([2 * X, ONE]) == P(-2)
    # det [[4x^2-2, 2x], [8x, 2]] = -8x^2 - 4
    assert wronskian([4 * X ** 2 - 2, 2 * X]) == -8 * X ** 2 - 4


def test_wronskian_matches_cofactor_oracle():
    def cofactor_det(m):
        if len(m) == 1:
            return m[0][0]
        total = ZERO
        for j in range(len(m)):
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            term = m[0][j] * cofactor_det(minor)
            total = total + (term if j % 2 == 0 else -term)
        return total

    entries = [X ** 3 + 1, 2 * X ** 2 - X, X + 5, 7 * X ** 4 - 2 * X]
    rows = [entries]
    for _ in range(3):
        rows.append([p.derivative() for p in rows[-1]])
    assert wronskian(entries) == cofactor_det(rows)


def test_wronskian_zero_pivot_path():
    # leading entry zero forces the row-pivot branch
    assert wronskian([ONE, X, X ** 2]) == P(2)
    assert wronskian([X, X]) == ZERO


# -- integration ------------------------------------------------------------------

def test_integrate_examples():
    assert integrate(RatFun(P(0, 0, F(8, 9)))) == RatFun(P(0, 0, 0, F(8, 27)))
    with pytest.raises(NonRationalIntegral):
        integrate(RatFun(ONE, X))
    assert integrate(RatFun(P(-1), X ** 2)) == RatFun(ONE, X)


def test_integrate_ostrogradsky_reduction():
    f = RatFun(P(2, 1), (X ** 2 + 1) ** 2)
    fi = integrate(f.derivative())
    assert fi == f - f.value_at(0)
    with pytest.raises(NonRationalIntegral):
        # 1/(x^2+1) integrates to arctan
        integrate(RatFun(ONE, X ** 2 + 1))


def test_integrate_constant_conventions():
    # finite at 0: F(0) = 0
    fi = integrate(RatFun(P(0, 2)))
    assert fi.value_at(0) == 0
    # pole at 0: zero constant term in the polynomial part
    g = integrate(RatFun(P(0, 0, 3)) + RatFun(P(-1), X ** 2))
    assert g == RatFun(X ** 4 + 1, X)


# -- property tests ---------------------------------------------------------------

small_fractions = st.fractions(min_value=-9, max_value=9, max_denominator=9)
small_polys = st.lists(small_fractions, min_size=0, max_size=5).map(Poly)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero)


@given(small_polys, small_polys)
@settings(max_examples=60, deadline=None)
def test_product_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(nonzero_polys, nonzero_polys, nonzero_polys, nonzero_polys)
@settings(max_examples=40, deadline=None)
def test_mul_div_round_trip(a, b, c, d):
    f, g = RatFun(a, b), RatFun(c, d)
    assert (f * g) / g == f


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=40, deadline=None)
def test_log_derivative_additive(p, q):
    f, g = RatFun(p), RatFun(q)
    assert log_derivative(f * g) == log_derivative(f) + log_derivative(g)


@given(st.lists(small_polys, min_size=2, max_size=4), st.data())
@settings(max_examples=40, deadline=None)
def test_wronskian_alternating(entries, data):
    i = data.draw(st.integers(min_value=0, max_value=len(entries) - 2))
    swapped = entries[:]
    swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
    assert wronskian(swapped) == -wronskian(entries)


@given(small_polys)
@settings(max_examples=40, deadline=None)
def test_integrate_inverts_derivative(p):
    p = p - p.constant_term()  # zero constant term
    assert integrate(RatFun(p.derivative())) == RatFun(p)
