# app/yv/painleve.py
"""
Painleve II Rational Solutions
w_n = Q_{n-1}'/Q_{n-1} - Q_n'/Q_n solves w'' = 2w^3 + zw + n; this module
builds w_n, checks the equation exactly and counts its real poles
"""
import logging
from fractions import Fraction

from app.algebra.intpoly import IntPoly, Z, RationalLike, are_coprime, as_rational, derivative
from app.algebra.ratfunc import (
    RationalFunction, ZERO_RF, rf_arith, rf_derivative, rf_eval, rf_neg, rf_pow,
)
from app.errors import CommonRootDetected
from app.models.census import IsolatingInterval
from app.models.poles import PoleCensus, PoleSide
from app.yv.census import census, refine, sturm_for
from app.yv.generator import YVCache, generate

logger = logging.getLogger(__name__)

SIDE_PLUS = 'plus'
SIDE_MINUS = 'minus'

DEFAULT_RESIDUE_WIDTH = Fraction(1, 2 ** 60)
DEFAULT_RESIDUE_OFFSET = Fraction(1, 2 ** 30)
DEFAULT_RESIDUE_TOLERANCE = Fraction(1, 2 ** 10)


def log_derivative(p: IntPoly) -> RationalFunction:
    """p'/p in reduced form"""
    return RationalFunction.make(derivative(p), p)


def rational_solution(n: int, cache: YVCache) -> RationalFunction:
    """w_n, with w_0 = 0 and w_{-n} = -w_n"""
    if n == 0:
        return ZERO_RF
    if n < 0:
        return rf_neg(rational_solution(-n, cache))

    def build():
        generate(n, cache)
        prev, cur = cache.entries[n - 1], cache.entries[n]
        return rf_arith(log_derivative(prev), log_derivative(cur), 'sub')

    return cache.memo(('w', n), build)


def p2_residual(n: int, cache: YVCache) -> RationalFunction:
    """w'' - 2w^3 - zw - n built from rational-function operations"""
    w = rational_solution(n, cache)
    w2 = rf_derivative(rf_derivative(w))
    cubic = rf_arith(RationalFunction.from_poly(IntPoly.constant(2)), rf_pow(w, 3), 'mul')
    linear = rf_arith(RationalFunction.from_poly(Z), w, 'mul')
    alpha = RationalFunction.from_poly(IntPoly.constant(n))
    residual = rf_arith(w2, cubic, 'sub')
    residual = rf_arith(residual, linear, 'sub')
    return rf_arith(residual, alpha, 'sub')


def verify_p2(n: int, cache: YVCache) -> bool:
    """
    True iff w_n satisfies Painleve II with alpha = n exactly

    With w = N/D everything is put over D^3:
        N''D^2 - 2N'D'D - N D''D + 2N D'^2 - 2N^3 - zN D^2 - n D^3 == 0
    """
    w = rational_solution(n, cache)
    N, D = w.num, w.den
    N1, N2 = derivative(N, 1), derivative(N, 2)
    D1, D2 = derivative(D, 1), derivative(D, 2)
    DD = D * D

    lhs = N2 * DD - (N1 * D1 * D).scale(2) - N * D2 * D + (N * D1 * D1).scale(2)
    rhs = (N * N * N).scale(2) + Z * N * DD + (DD * D).scale(n)
    ok = (lhs - rhs).is_zero
    if not ok:
        logger.warning(f"⚠️ Painleve II residual of w_{n} is nonzero")
    return ok


def pole_census(n: int, cache: YVCache) -> PoleCensus:
    """
    Real poles of w_n: residue +1 at roots of Q_{n-1}, -1 at roots of Q_n

    Raises:
        CommonRootDetected: Q_{n-1} and Q_n share a root
    """
    if n < 1:
        raise ValueError("pole census needs n >= 1")
    generate(n, cache)
    if not are_coprime(cache.entries[n - 1], cache.entries[n]):
        raise CommonRootDetected(f"Q_{n - 1} and Q_{n} share a root")

    result = PoleCensus(
        n=n,
        poles_residue_plus=PoleSide.from_census(census(n - 1, cache)),
        poles_residue_minus=PoleSide.from_census(census(n, cache)),
    )
    logger.info(f"✅ w_{n}: {result.total} real poles "
                f"({result.poles_residue_plus.total} residue +1, "
                f"{result.poles_residue_minus.total} residue -1)")
    return result


def residue_check(n: int, cache: YVCache, iv: IsolatingInterval, side: str,
                  width: RationalLike = DEFAULT_RESIDUE_WIDTH,
                  offset: RationalLike = DEFAULT_RESIDUE_OFFSET,
                  tolerance: RationalLike = DEFAULT_RESIDUE_TOLERANCE) -> bool:
    """
    Check the residue of w_n at the root isolated by iv

    iv is refined to at most min(width, offset * tolerance / 16), m is its
    midpoint and (z - m) w_n(z) is evaluated exactly at z = m + offset.
    Near a simple pole with residue r this is r up to O(width / offset + offset),
    so the check passes when it lies within `tolerance` of +1 (plus side) or
    -1 (minus side). The cap keeps the width term below tolerance / 16 for
    any caller-supplied width.
    """
    if side not in (SIDE_PLUS, SIDE_MINUS):
        raise ValueError(f"side must be '{SIDE_PLUS}' or '{SIDE_MINUS}'")
    width, offset, tolerance = as_rational(width), as_rational(offset), as_rational(tolerance)
    if offset <= 0 or tolerance <= 0:
        raise ValueError("residue offset and tolerance must be positive")
    width = min(width, offset * tolerance / 16)

    index = n - 1 if side == SIDE_PLUS else n
    generate(n, cache)
    target = cache.entries[index]
    iv = refine(target, iv, width, sturm_for(index, cache))

    m = iv.midpoint
    value = rf_eval(rational_solution(n, cache), m + offset)
    if value is None:
        logger.warning(f"⚠️ residue sample point of w_{n} landed on a pole")
        return False

    expected = 1 if side == SIDE_PLUS else -1
    return abs(offset * value - expected) <= tolerance
