# app/algebra/intpoly.py
"""
Exact Integer Polynomials
Dense univariate polynomials over arbitrary-precision integers, plus the
rational evaluation, gcd and root-bound helpers every other module uses
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from app.errors import DegreeZero, NotDivisible

logger = logging.getLogger(__name__)

# Degree reported for the zero polynomial
ZERO_DEGREE = -1

Rational = Fraction
RationalLike = Union[int, Fraction, str]

ARITH_KINDS = ('add', 'sub', 'mul')


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a reduced Fraction"""
    return x if isinstance(x, Fraction) else Fraction(x)


def rational_to_str(x: Fraction) -> str:
    """Always "p/q", even for integers"""
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class IntPoly:
    """
    Dense polynomial, coeffs[i] is the coefficient of z^i

    Trailing zeros are stripped on construction so the leading coefficient
    is nonzero unless the polynomial is zero (empty tuple).
    """

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, 'coeffs', coeffs[:end])

    # ============================================
    # Constructors
    # ============================================

    @classmethod
    def constant(cls, c: int) -> 'IntPoly':
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> 'IntPoly':
        """c * z^k"""
        return cls((0,) * k + (c,))

    @classmethod
    def from_json(cls, items: Sequence[str]) -> 'IntPoly':
        """
        Parse the canonical coefficient array (decimal strings, lowest degree first)

        Raises:
            ValueError: if an entry is not a plain decimal integer string
        """
        coeffs = []
        for item in items:
            if not isinstance(item, str):
                raise ValueError(f"coefficient must be a decimal string, got {item!r}")
            text = item.strip()
            digits = text[1:] if text[:1] == '-' else text
            if not digits.isdigit():
                raise ValueError(f"not a decimal integer: {item!r}")
            coeffs.append(int(text))
        return cls(tuple(coeffs))

    # ============================================
    # Properties
    # ============================================

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)"""
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # ============================================
    # Operators (thin wrappers over the module functions)
    # ============================================

    def __add__(self, other: 'IntPoly') -> 'IntPoly':
        return arith(self, other, 'add')

    def __sub__(self, other: 'IntPoly') -> 'IntPoly':
        return arith(self, other, 'sub')

    def __mul__(self, other: 'IntPoly') -> 'IntPoly':
        return arith(self, other, 'mul')

    def __neg__(self) -> 'IntPoly':
        return IntPoly(tuple(-c for c in self.coeffs))

    def scale(self, k: int) -> 'IntPoly':
        return IntPoly(tuple(k * c for c in self.coeffs))

    # ============================================
    # Serialization
    # ============================================

    def to_json(self) -> List[str]:
        """Canonical form, e.g. Q_2 -> ["4", "0", "0", "1"]; zero -> []"""
        return [str(c) for c in self.coeffs]

    def to_text(self, var: str = 'z') -> str:
        """Human form, highest degree first: "z^6 + 20z^3 - 80" """
        if self.is_zero:
            return '0'
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return ' '.join(parts)

    def __str__(self) -> str:
        return self.to_text()


ZERO = IntPoly()
ONE = IntPoly((1,))
Z = IntPoly((0, 1))


# ============================================
# Ring arithmetic
# ============================================

def arith(p: IntPoly, q: IntPoly, kind: str) -> IntPoly:
    """
    Exact add / sub / mul

    Args:
        kind: 'add', 'sub' or 'mul'
    """
    if kind == 'mul':
        return _convolve(p, q)

    if kind not in ARITH_KINDS:
        raise ValueError(f"unknown arith kind: {kind!r}")

    a, b = p.coeffs, q.coeffs
    size = max(len(a), len(b))
    if kind == 'add':
        out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)]
    else:
        out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)]
    return IntPoly(tuple(out))


def _convolve(p: IntPoly, q: IntPoly) -> IntPoly:
    # Schoolbook product over the nonzero terms of the sparser factor.
    # A subquadratic algorithm would slot in here.
    if p.is_zero or q.is_zero:
        return ZERO
    a, b = p.coeffs, q.coeffs
    if sum(1 for c in a if c) > sum(1 for c in b if c):
        a, b = b, a

    out = [0] * (len(a) + len(b) - 1)
    b_terms = [(j, c) for j, c in enumerate(b) if c]
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in b_terms:
            out[i + j] += ca * cb
    return IntPoly(tuple(out))


def derivative(p: IntPoly, order: int = 1) -> IntPoly:
    """Formal derivative iterated `order` times; order 0 returns p"""
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    if order == 0:
        return p
    return IntPoly(tuple(math.perm(i, order) * c for i, c in enumerate(p.coeffs) if i >= order))


def exact_div(p: IntPoly, q: IntPoly) -> IntPoly:
    """
    Return r with q * r == p

    Raises:
        ZeroDivisionError: q is zero
        NotDivisible: the division leaves a remainder
    """
    if q.is_zero:
        raise ZeroDivisionError("exact_div by the zero polynomial")
    if p.is_zero:
        return ZERO

    dp, dq = p.degree, q.degree
    if dp < dq:
        raise NotDivisible(f"degree {dp} polynomial is not divisible by degree {dq}")

    lc = q.lc
    rem = list(p.coeffs)
    out = [0] * (dp - dq + 1)
    q_terms = [(j, c) for j, c in enumerate(q.coeffs[:-1]) if c]

    for k in range(dp - dq, -1, -1):
        c = rem[k + dq]
        if c == 0:
            continue
        t, r = divmod(c, lc)
        if r:
            raise NotDivisible(f"leading coefficient {lc} does not divide {c}")
        out[k] = t
        for j, cj in q_terms:
            rem[k + j] -= t * cj

    if any(rem[:dq]):
        raise NotDivisible("nonzero remainder")
    return IntPoly(tuple(out))


def pseudo_remainder(p: IntPoly, q: IntPoly, absolute: bool = False) -> IntPoly:
    """
    Remainder of lc(q)^(deg p - deg q + 1) * p by q, computed over the integers

    With absolute=True the multiplier is |lc(q)|^(...), so the result is a
    positive multiple of the true remainder over the rationals.
    """
    if q.is_zero:
        raise ZeroDivisionError("pseudo_remainder by the zero polynomial")
    dp, dq = p.degree, q.degree
    if dp < dq:
        return p

    lc = q.lc
    rem = list(p.coeffs)
    q_terms = [(j, c) for j, c in enumerate(q.coeffs[:-1]) if c]
    pending = dp - dq + 1

    for k in range(dp - dq, -1, -1):
        c = rem.pop()
        if c == 0:
            continue
        # every step that does work multiplies the running remainder by lc
        if lc != 1:
            rem = [x * lc for x in rem]
        for j, cj in q_terms:
            rem[k + j] -= c * cj
        pending -= 1

    if pending and lc != 1:
        factor = lc ** pending
        rem = [x * factor for x in rem]

    result = IntPoly(tuple(rem))
    if absolute and lc < 0 and (dp - dq + 1) % 2 == 1:
        result = -result
    return result


# ============================================
# Content, decimation and gcd
# ============================================

def content(p: IntPoly) -> int:
    """Positive gcd of the coefficients (0 for the zero polynomial)"""
    return math.gcd(*p.coeffs) if p.coeffs else 0


def primitive_part(p: IntPoly) -> IntPoly:
    """p divided by its content, sign preserved"""
    c = content(p)
    if c in (0, 1):
        return p
    return IntPoly(tuple(x // c for x in p.coeffs))


def decimate(p: IntPoly) -> Tuple[int, int, IntPoly]:
    """
    Write p = z^e * P(z^s) with P(0) != 0 and the stride s maximal

    s is 0 when p / z^e is a constant (compatible with any stride).

    Returns:
        Tuple of (e, s, P)
    """
    if p.is_zero:
        raise ValueError("cannot decimate the zero polynomial")
    support = [i for i, c in enumerate(p.coeffs) if c]
    e = support[0]
    s = math.gcd(*(i - e for i in support))
    if s == 0:
        return e, 0, IntPoly.constant(p.coeffs[e])
    return e, s, IntPoly(p.coeffs[e::s])


def inflate(e: int, s: int, p: IntPoly) -> IntPoly:
    """Inverse of decimate: z^e * p(z^s)"""
    if p.is_zero:
        return ZERO
    if s == 0:
        if not p.is_constant:
            raise ValueError("stride 0 requires a constant polynomial")
        return IntPoly.monomial(p.lc, e)
    out = [0] * (e + s * p.degree + 1)
    for k, c in enumerate(p.coeffs):
        out[e + s * k] = c
    return IntPoly(tuple(out))


def _positive_lead(p: IntPoly) -> IntPoly:
    return -p if p.lc < 0 else p


def gcd_primitive(p: IntPoly, q: IntPoly) -> IntPoly:
    """
    Primitive gcd with positive leading coefficient

    Common powers of z are split off and both inputs are compressed to
    their shared stride (z^s -> u) before the subresultant remainder
    sequence runs, which leaves the gcd unchanged.

    Raises:
        ValueError: both inputs are zero
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials")
    if q.is_zero:
        return _positive_lead(primitive_part(p))
    if p.is_zero:
        return _positive_lead(primitive_part(q))

    ep, sp, P = decimate(p)
    eq, sq, Q = decimate(q)
    e = min(ep, eq)
    s = math.gcd(sp, sq)
    if s == 0 or P.is_constant or Q.is_constant:
        return IntPoly.monomial(1, e)

    P = inflate(0, sp // s, P)
    Q = inflate(0, sq // s, Q)
    return inflate(e, s, _subresultant_gcd(P, Q))


def _subresultant_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    # Subresultant PRS (Collins / Brown), inputs of degree >= 1
    if a.degree < b.degree:
        a, b = b, a
    a, b = primitive_part(a), primitive_part(b)
    g = h = 1
    while True:
        delta = a.degree - b.degree
        r = pseudo_remainder(a, b)
        if r.is_zero:
            return _positive_lead(primitive_part(b))
        if r.degree == 0:
            return ONE
        a = b
        divisor = g * h ** delta
        b = IntPoly(tuple(c // divisor for c in r.coeffs))
        g = a.lc
        if delta == 0:
            continue
        h = g ** delta // h ** (delta - 1)


def is_squarefree(p: IntPoly) -> bool:
    if p.degree <= 0:
        return True
    return gcd_primitive(p, derivative(p)).degree == 0


def are_coprime(p: IntPoly, q: IntPoly) -> bool:
    return gcd_primitive(p, q).degree == 0


# ============================================
# Evaluation
# ============================================

def _homogeneous_horner(p: IntPoly, x: Fraction) -> Tuple[int, int]:
    """Integer pair (N, D) with p(x) = N / D and D = den(x)^deg p > 0"""
    if p.is_zero:
        return 0, 1
    num, den = x.numerator, x.denominator
    coeffs = p.coeffs
    acc = coeffs[-1]
    if den == 1:
        for c in reversed(coeffs[:-1]):
            acc = acc * num + c
        return acc, 1

    den_pow = 1
    for c in reversed(coeffs[:-1]):
        den_pow *= den
        acc = acc * num + c * den_pow
    return acc, den_pow


def eval_at(p: IntPoly, x: RationalLike) -> Fraction:
    """Exact value p(x)"""
    acc, scale = _homogeneous_horner(p, as_rational(x))
    return Fraction(acc, scale)


def sign_at(p: IntPoly, x: RationalLike) -> int:
    """Sign of p(x) in {-1, 0, 1} without building the reduced Fraction"""
    acc, _ = _homogeneous_horner(p, as_rational(x))
    return (acc > 0) - (acc < 0)


# ============================================
# Root bounds
# ============================================

def cauchy_bound(p: IntPoly) -> Fraction:
    """
    B = 1 + max_i |a_i| / |a_d|; every real root lies in (-B, B)

    Raises:
        DegreeZero: p is constant
    """
    if p.degree < 1:
        raise DegreeZero("Cauchy bound needs degree >= 1")
    top = max(abs(c) for c in p.coeffs[:-1])
    return 1 + Fraction(top, abs(p.lc))


def _ceil_log2(x: Fraction) -> int:
    """Smallest t with 2^t >= x, for x > 0"""
    t = x.numerator.bit_length() - x.denominator.bit_length()
    # 2^(t-1) < x < 2^(t+1) at this point
    if Fraction(2) ** t < x:
        t += 1
    return t


def dyadic_root_bound(p: IntPoly) -> Fraction:
    """
    Power of two B with every real root strictly inside (-B, B)

    B = 2^(k+1) where 2^k >= max_i |a_(d-i) / a_d|^(1/i). Much tighter than
    the Cauchy bound on Q_n, whose constant terms are huge.

    Raises:
        DegreeZero: p is constant
    """
    if p.degree < 1:
        raise DegreeZero("root bound needs degree >= 1")
    d, lead = p.degree, abs(p.lc)
    k = None
    for i in range(1, d + 1):
        c = p.coeffs[d - i]
        if c == 0:
            continue
        t = _ceil_log2(Fraction(abs(c), lead))
        k_i = -((-t) // i)
        k = k_i if k is None else max(k, k_i)
    if k is None:
        # a * z^d, only root is 0
        return Fraction(1)
    return Fraction(2) ** (k + 1)
