# test_exactpoly.py
"""
Exact polynomial and rational-function arithmetic
sympy is used only as an independent reference
"""
import random
from fractions import Fraction

import pytest
import sympy

from app.algebra.intpoly import (
    IntPoly, ONE, ZERO, Z, ZERO_DEGREE,
    arith, cauchy_bound, content, decimate, derivative, dyadic_root_bound, eval_at, exact_div,
    gcd_primitive, inflate, is_squarefree, primitive_part, pseudo_remainder, sign_at,
)
from app.algebra.ratfunc import RationalFunction, rf_arith, rf_derivative, rf_eval, rf_pow
from app.errors import DegreeZero, NotDivisible

z = sympy.Symbol('z')

Q2 = IntPoly((4, 0, 0, 1))
Q3 = IntPoly((-80, 0, 0, 20, 0, 0, 1))


def P(*coeffs):
    """Coefficients lowest degree first"""
    return IntPoly(coeffs)


def to_sympy(p: IntPoly) -> sympy.Poly:
    return sympy.Poly(list(reversed(p.coeffs)) or [0], z, domain='ZZ')


def random_poly(rng, degree, size=50):
    coeffs = [rng.randint(-size, size) for _ in range(degree)] + [rng.choice([-1, 1]) * rng.randint(1, size)]
    return IntPoly(tuple(coeffs))


# ============================================
# IntPoly basics
# ============================================

def test_trailing_zeros_are_stripped():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).is_zero
    assert ZERO.degree == ZERO_DEGREE


def test_canonical_json_and_text():
    assert Q2.to_json() == ['4', '0', '0', '1']
    assert IntPoly.from_json(['4', '0', '0', '1']) == Q2
    assert Q3.to_text() == 'z^6 + 20z^3 - 80'
    assert Z.to_text() == 'z'
    assert P(-1, 0, -2).to_text() == '-2z^2 - 1'
    assert ONE.to_json() == ['1']


def test_from_json_rejects_non_decimal():
    with pytest.raises(ValueError):
        IntPoly.from_json(['1e3'])
    with pytest.raises(ValueError):
        IntPoly.from_json([4])


# ============================================
# arith / derivative / exact_div
# ============================================

def test_arith_examples():
    assert arith(Q2, P(0, 0, 0, -1), 'add') == P(4)
    assert arith(Z, P(11200, 0, 0, 0, 0, 0, 60, 0, 0, 1), 'mul') == \
        P(0, 11200, 0, 0, 0, 0, 0, 60, 0, 0, 1)
    assert arith(Q2, ZERO, 'mul') == ZERO
    assert arith(Q2, Q2, 'sub') == ZERO


def test_arith_rejects_unknown_kind():
    with pytest.raises(ValueError):
        arith(Q2, Q2, 'div')


def test_mul_degree_adds():
    rng = random.Random(7)
    for _ in range(20):
        p, q = random_poly(rng, rng.randint(0, 8)), random_poly(rng, rng.randint(0, 8))
        assert (p * q).degree == p.degree + q.degree
        assert to_sympy(p * q) == to_sympy(p) * to_sympy(q)


def test_derivative_examples():
    assert derivative(Q2, 1) == P(0, 0, 3)
    assert derivative(Q2, 2) == P(0, 6)
    assert derivative(P(7), 1) == ZERO
    assert derivative(Q2, 0) == Q2
    assert derivative(Q2, 4) == ZERO


def test_exact_div_examples():
    assert exact_div(P(-1, 0, 1), P(-1, 1)) == P(1, 1)
    assert exact_div(Q2, ONE) == Q2
    with pytest.raises(NotDivisible):
        exact_div(P(1, 0, 1), Z)
    with pytest.raises(ZeroDivisionError):
        exact_div(Q2, ZERO)


def test_exact_div_non_monic_divisor():
    assert exact_div(P(-6, 2, 4, 2), P(-2, 2)) == P(3, 3, 1)
    with pytest.raises(NotDivisible):
        exact_div(P(1, 1), P(1, 2))


def test_ring_invariants_on_random_polys():
    rng = random.Random(2024)
    for _ in range(30):
        p = random_poly(rng, rng.randint(0, 7))
        q = random_poly(rng, rng.randint(0, 7))
        x = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        assert exact_div(p * q, q) == p
        assert derivative(p * q) == derivative(p) * q + p * derivative(q)
        assert eval_at(p + q, x) == eval_at(p, x) + eval_at(q, x)


def test_pseudo_remainder_matches_sympy():
    rng = random.Random(11)
    for _ in range(20):
        p = random_poly(rng, rng.randint(3, 9))
        q = random_poly(rng, rng.randint(1, 3))
        assert to_sympy(pseudo_remainder(p, q)) == sympy.prem(to_sympy(p), to_sympy(q))


def test_absolute_pseudo_remainder_is_positive_multiple():
    p, q = P(1, 2, 3, 4), P(1, -3)          # lc(q) < 0, odd power
    plain, absolute = pseudo_remainder(p, q), pseudo_remainder(p, q, absolute=True)
    assert absolute == -plain
    # remainder by (1 - 3z) is p(1/3) > 0
    assert absolute.degree == 0 and absolute.lc > 0
    assert eval_at(p, Fraction(1, 3)) > 0


# ============================================
# content, decimation, gcd
# ============================================

def test_content_and_primitive_part():
    assert content(P(6, -9, 12)) == 3
    assert primitive_part(P(-6, 9, -12)) == P(-2, 3, -4)
    assert content(ZERO) == 0


def test_decimate_and_inflate():
    q4 = P(0, 11200, 0, 0, 0, 0, 0, 60, 0, 0, 1)
    e, s, base = decimate(q4)
    assert (e, s) == (1, 3)
    assert base == P(11200, 0, 60, 1)
    assert inflate(e, s, base) == q4
    assert decimate(P(0, 0, 5)) == (2, 0, P(5))
    assert inflate(2, 0, P(5)) == P(0, 0, 5)


def test_gcd_examples():
    assert gcd_primitive(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)
    assert gcd_primitive(Q2, derivative(Q2)) == ONE
    assert gcd_primitive(P(-4, -6, 2), ZERO) == P(-2, -3, 1)
    assert gcd_primitive(ZERO, P(-3, -6)) == P(1, 2)
    with pytest.raises(ValueError):
        gcd_primitive(ZERO, ZERO)


def test_gcd_keeps_common_power_of_z():
    assert gcd_primitive(P(0, 0, 1, 1), P(0, 0, 0, 2)) == P(0, 0, 1)
    assert gcd_primitive(P(0, 4), P(0, 0, 0, 0, 6)) == Z


def test_gcd_matches_sympy_on_products():
    rng = random.Random(99)
    for _ in range(25):
        common = random_poly(rng, rng.randint(0, 4), size=9)
        a = random_poly(rng, rng.randint(1, 5), size=9) * common
        b = random_poly(rng, rng.randint(1, 5), size=9) * common
        ours = gcd_primitive(a, b)
        _, expected = sympy.gcd(to_sympy(a), to_sympy(b)).primitive()
        if expected.LC() < 0:
            expected = -expected
        assert to_sympy(ours) == expected
        assert ours.lc > 0
        exact_div(a, ours)
        exact_div(b, ours)


def test_gcd_on_strided_inputs():
    # both inputs in Z[z^3] and z*Z[z^3]
    a = inflate(0, 3, P(-1, 0, 1)) * Z       # z^7 - z
    b = inflate(0, 3, P(1, 1))                # z^3 + 1
    assert gcd_primitive(a, b) == P(1, 0, 0, 1)


def test_is_squarefree():
    assert is_squarefree(Q3)
    assert not is_squarefree(P(0, 0, 1))
    assert not is_squarefree(P(1, 2, 1))


# ============================================
# evaluation and bounds
# ============================================

def test_eval_and_sign_examples():
    assert eval_at(Q2, 0) == 4
    assert eval_at(Q3, 0) == -80
    assert eval_at(Q2, -2) == -4
    assert sign_at(Q2, 0) == 1
    assert sign_at(Q3, 0) == -1
    assert sign_at(Z, 0) == 0


def test_sign_agrees_with_eval_at_fractions():
    rng = random.Random(5)
    for _ in range(40):
        p = random_poly(rng, rng.randint(0, 9))
        x = Fraction(rng.randint(-100, 100), rng.randint(1, 64))
        value = eval_at(p, x)
        assert sign_at(p, x) == (value > 0) - (value < 0)
        expected = to_sympy(p).eval(sympy.Rational(x.numerator, x.denominator))
        assert value == Fraction(str(expected))


def test_cauchy_bound_examples():
    assert cauchy_bound(Q2) == 5
    assert cauchy_bound(Q3) == 81
    assert cauchy_bound(P(-6, 2)) == 4
    with pytest.raises(DegreeZero):
        cauchy_bound(P(3))


def test_cauchy_bound_sign_matches_leading_term():
    for p in (Q2, Q3, P(-6, 2), P(5, -1, 0, -2)):
        b = cauchy_bound(p)
        lead = 1 if p.lc > 0 else -1
        assert sign_at(p, b) == lead
        assert sign_at(p, -b) == lead * (-1) ** p.degree


def test_dyadic_bound_encloses_all_roots():
    rng = random.Random(3)
    for _ in range(15):
        p = random_poly(rng, rng.randint(1, 8), size=1000)
        bound = dyadic_root_bound(p)
        assert bound.denominator == 1 or bound.numerator == 1
        for root in sympy.real_roots(to_sympy(p)):
            assert -float(bound) < float(root.evalf()) < float(bound)
    assert dyadic_root_bound(P(0, 0, 3)) == 1
    with pytest.raises(DegreeZero):
        dyadic_root_bound(ONE)


# ============================================
# rational functions
# ============================================

def rf(num, den):
    return RationalFunction.make(num, den)


def test_rf_arith_examples():
    inv_z = rf(ONE, Z)
    assert rf_arith(inv_z, inv_z, 'sub') == RationalFunction(ZERO, ONE)
    assert rf_arith(-inv_z, -inv_z, 'mul') == rf(ONE, P(0, 0, 1))
    w1 = rf_arith(rf(derivative(ONE), ONE), rf(derivative(Z), Z), 'sub')
    assert w1 == RationalFunction(P(-1), Z)


def test_rf_make_reduces_and_normalizes():
    r = rf(P(-2, 0, 2), P(2, -2))             # (2z^2 - 2) / (2 - 2z)
    assert r == RationalFunction(P(-1, -1), ONE)
    s = rf(P(3), P(0, -6))
    assert s.den.lc > 0 and s == RationalFunction(P(-1), P(0, 2))


def test_rf_add_with_shared_factor_is_reduced():
    a = rf(ONE, P(-1, 0, 1))                  # 1/(z^2 - 1)
    b = rf(ONE, P(1, 1))                      # 1/(z + 1)
    total = rf_arith(a, b, 'add')             # z / (z^2 - 1)
    assert total == rf(Z, P(-1, 0, 1))
    diff = rf_arith(rf(ONE, P(-1, 1)), rf(P(2), P(-1, 0, 1)), 'sub')
    assert diff == rf(ONE, P(1, 1))           # 1/(z-1) - 2/(z^2-1) = 1/(z+1)


def test_rf_derivative_examples():
    assert rf_derivative(rf(P(-1), Z)) == rf(ONE, P(0, 0, 1))
    assert rf_derivative(rf(ONE, P(0, 0, 1))) == rf(P(-2), P(0, 0, 0, 1))
    assert rf_derivative(RationalFunction.from_poly(Q3)) == RationalFunction.from_poly(derivative(Q3))


def test_rf_results_are_reduced():
    rng = random.Random(17)
    for _ in range(15):
        a = rf(random_poly(rng, 3, 6), random_poly(rng, 3, 6))
        b = rf(random_poly(rng, 2, 6), random_poly(rng, 2, 6))
        for result in (rf_arith(a, b, 'add'), rf_arith(a, b, 'mul'), rf_derivative(a), rf_pow(b, 2)):
            if not result.is_zero:
                assert gcd_primitive(result.num, result.den).degree == 0
                assert result.den.lc > 0
        expected = sympy.cancel(
            to_sympy(a.num).as_expr() / to_sympy(a.den).as_expr()
            + to_sympy(b.num).as_expr() / to_sympy(b.den).as_expr())
        got = rf_arith(a, b, 'add')
        assert sympy.cancel(to_sympy(got.num).as_expr() / to_sympy(got.den).as_expr() - expected) == 0


def test_rf_eval_marks_poles():
    w = rf(P(-1), Z)
    assert rf_eval(w, 0) is None
    assert rf_eval(w, Fraction(1, 2)) == -2
