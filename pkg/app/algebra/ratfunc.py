# app/algebra/ratfunc.py
"""
Reduced rational functions num/den over the integers

Canonical form: gcd(num, den) constant, num and den share no integer
content, den has a positive leading coefficient, zero is 0/1. Two equal
functions therefore compare equal field by field.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from app.algebra.intpoly import (
    IntPoly, ZERO, ONE, RationalLike,
    arith, content, derivative, eval_at, exact_div, gcd_primitive, _homogeneous_horner, as_rational,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RationalFunction:
    num: IntPoly
    den: IntPoly

    @classmethod
    def make(cls, num: IntPoly, den: IntPoly) -> 'RationalFunction':
        """Build from an arbitrary pair, removing the polynomial gcd"""
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            return cls(ZERO, ONE)
        g = gcd_primitive(num, den)
        if g.degree > 0:
            num, den = exact_div(num, g), exact_div(den, g)
        return _normalized(num, den)

    @classmethod
    def from_poly(cls, p: IntPoly) -> 'RationalFunction':
        return _normalized(p, ONE)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __neg__(self) -> 'RationalFunction':
        return rf_neg(self)

    def to_dict(self) -> dict:
        return {'num': self.num.to_json(), 'den': self.den.to_json()}

    def to_text(self) -> str:
        if self.den == ONE:
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"


def _normalized(num: IntPoly, den: IntPoly) -> RationalFunction:
    """Strip shared integer content and fix the denominator sign; gcd already constant"""
    if den.is_zero:
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero:
        return RationalFunction(ZERO, ONE)
    c = math.gcd(content(num), content(den))
    if c > 1:
        num = IntPoly(tuple(x // c for x in num.coeffs))
        den = IntPoly(tuple(x // c for x in den.coeffs))
    if den.lc < 0:
        num, den = -num, -den
    return RationalFunction(num, den)


ZERO_RF = RationalFunction(ZERO, ONE)


def rf_arith(a: RationalFunction, b: RationalFunction, kind: str) -> RationalFunction:
    """
    Exact reduced add / sub / mul

    Uses the Henrici forms: gcds are taken between the smaller
    pieces (denominators with each other, numerators with the opposite
    denominators) instead of on the full unreduced result.
    """
    if kind == 'mul':
        return _rf_mul(a, b)
    if kind not in ('add', 'sub'):
        raise ValueError(f"unknown rf_arith kind: {kind!r}")

    if b.is_zero:
        return a
    if a.is_zero:
        return b if kind == 'add' else rf_neg(b)

    if a.den == b.den:
        return RationalFunction.make(arith(a.num, b.num, kind), a.den)

    g = gcd_primitive(a.den, b.den)
    if g.degree == 0:
        num = arith(a.num * b.den, b.num * a.den, kind)
        return _normalized(num, a.den * b.den)

    a_cof = exact_div(a.den, g)
    b_cof = exact_div(b.den, g)
    t = arith(a.num * b_cof, b.num * a_cof, kind)
    if t.is_zero:
        return ZERO_RF
    g2 = gcd_primitive(t, g)
    if g2.degree > 0:
        t = exact_div(t, g2)
        b_den = exact_div(b.den, g2)
    else:
        b_den = b.den
    return _normalized(t, a_cof * b_den)


def _rf_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    if a.is_zero or b.is_zero:
        return ZERO_RF
    g1 = gcd_primitive(a.num, b.den)
    g2 = gcd_primitive(b.num, a.den)
    num = exact_div(a.num, g1) * exact_div(b.num, g2)
    den = exact_div(a.den, g2) * exact_div(b.den, g1)
    return _normalized(num, den)


def rf_neg(a: RationalFunction) -> RationalFunction:
    return RationalFunction(-a.num, a.den)


def _poly_pow(p: IntPoly, k: int) -> IntPoly:
    result, base = ONE, p
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def rf_pow(a: RationalFunction, k: int) -> RationalFunction:
    """a^k for any integer k; powers of a reduced pair stay reduced"""
    if k < 0:
        if a.is_zero:
            raise ZeroDivisionError("negative power of the zero rational function")
        a = _normalized(a.den, a.num)
        k = -k
    if k == 0:
        return RationalFunction(ONE, ONE)
    return _normalized(_poly_pow(a.num, k), _poly_pow(a.den, k))


def rf_derivative(a: RationalFunction) -> RationalFunction:
    """
    Quotient rule in reduced form

    With g = gcd(den, den'), h = den/g and k = den'/g:
        (num/den)' = (num' h - num k) / (g h^2)
    and that quotient is already reduced when num/den is.
    """
    if a.is_zero:
        return ZERO_RF
    num, den = a.num, a.den
    if den.is_constant:
        return _normalized(derivative(num), den)

    d_den = derivative(den)
    g = gcd_primitive(den, d_den)
    h = exact_div(den, g)
    k = exact_div(d_den, g)
    top = derivative(num) * h - num * k
    return _normalized(top, g * h * h)


def rf_eval(a: RationalFunction, x: RationalLike) -> Optional[Fraction]:
    """Exact value at x, or None when x is a pole (den(x) == 0 exactly)"""
    x = as_rational(x)
    den_acc, den_scale = _homogeneous_horner(a.den, x)
    if den_acc == 0:
        return None
    return eval_at(a.num, x) / Fraction(den_acc, den_scale)
