# app/yv/census.py
"""
Real Root Census
Sturm-chain counting and isolation of real roots, and the checks on
root counts, signs and interlacing of Yablonskii-Vorob'ev polynomials
"""
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from app.algebra.intpoly import (
    IntPoly, RationalLike,
    are_coprime, as_rational, decimate, derivative, dyadic_root_bound, inflate,
    primitive_part, pseudo_remainder, sign_at,
)
from app.errors import CommonRootDetected, NotSquarefree
from app.models.census import IsolatingInterval, RootCensus
from app.yv.generator import YVCache, generate, sign_at_zero_predicted

logger = logging.getLogger(__name__)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _count_changes(signs) -> int:
    changes, last = 0, 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            changes += 1
        last = s
    return changes


@dataclass(frozen=True)
class SturmChain:
    """
    Sturm sequence of a squarefree polynomial p, stored in u = z^stride

    A simple root at 0 is split off first (zero_root). What remains is
    P(z^stride) with P(0) != 0 and an odd stride, so u = z^stride is an
    increasing bijection of the reals and counts in u equal counts in z.
    """

    polys: Tuple[IntPoly, ...]
    stride: int = 1
    zero_root: bool = False

    def __len__(self):
        return len(self.polys)

    def variations(self, u: Fraction) -> int:
        """
        Sign variations of the chain at u (zeros dropped)

        u is a point of the stored variable u = z^stride, not z: pass
        to_u(x) to evaluate at z = x, as count_in does.
        """
        return _count_changes(sign_at(p, u) for p in self.polys)

    def variations_at_infinity(self, direction: int) -> int:
        """Sign variations as u -> +inf (direction 1) or -inf (direction -1)"""
        signs = []
        for p in self.polys:
            s = _sign(p.lc)
            if direction < 0 and p.degree % 2 == 1:
                s = -s
            signs.append(s)
        return _count_changes(signs)

    def to_u(self, x: Fraction) -> Fraction:
        return x ** self.stride

    def negative_count(self) -> int:
        """Roots in (-inf, 0), zero root excluded"""
        return self.variations_at_infinity(-1) - self.variations(Fraction(0))

    def positive_count(self) -> int:
        return self.variations(Fraction(0)) - self.variations_at_infinity(1)

    def total_count(self) -> int:
        return self.variations_at_infinity(-1) - self.variations_at_infinity(1) + int(self.zero_root)


def build_sturm(p: IntPoly) -> SturmChain:
    """
    Sturm chain p_0 = p, p_1 = p', p_{k+1} = -rem(p_{k-1}, p_k), each entry
    scaled by a positive constant to its primitive part

    Raises:
        NotSquarefree: p has a repeated root
        ValueError: p is zero
    """
    if p.is_zero:
        raise ValueError("Sturm chain of the zero polynomial")
    if p.is_constant:
        return SturmChain((p,))

    e, s, base = decimate(p)
    if e > 1:
        raise NotSquarefree(f"z^{e} divides the polynomial")
    zero_root = e == 1

    stride = s
    while stride and stride % 2 == 0:
        stride //= 2
    if s == 0:
        stride = 1
    else:
        base = inflate(0, s // stride, base)

    # the last nonzero remainder is gcd(p, p') up to a constant, so the
    # chain itself decides squarefreeness
    chain = [primitive_part(base)]
    if not base.is_constant:
        chain.append(primitive_part(derivative(chain[0])))
    while chain[-1].degree > 0:
        r = pseudo_remainder(chain[-2], chain[-1], absolute=True)
        if r.is_zero:
            raise NotSquarefree("gcd(p, p') is not constant")
        chain.append(primitive_part(-r))

    return SturmChain(tuple(chain), stride=stride, zero_root=zero_root)


def count_in(chain: SturmChain, lo: RationalLike, hi: RationalLike) -> int:
    """Distinct real roots in (lo, hi], V(lo) - V(hi)"""
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise ValueError("count_in needs lo < hi")
    count = chain.variations(chain.to_u(lo)) - chain.variations(chain.to_u(hi))
    if chain.zero_root and lo < 0 <= hi:
        count += 1
    return count


def isolate(p: IntPoly, chain: Optional[SturmChain] = None) -> List[IsolatingInterval]:
    """
    One isolating interval per real root, in increasing order

    Starts from (-B, B] with B a power of two bounding every root and
    bisects at dyadic midpoints until each piece holds one root.

    Raises:
        NotSquarefree: propagated from build_sturm
    """
    chain = chain if chain is not None else build_sturm(p)
    total = chain.total_count()
    if total == 0:
        return []

    bound = dyadic_root_bound(p)
    found = []
    work = [(-bound, bound, total)]
    while work:
        lo, hi, k = work.pop()
        if k == 0:
            continue
        if k == 1:
            found.append(IsolatingInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        left = count_in(chain, lo, mid)
        work.append((mid, hi, k - left))
        work.append((lo, mid, left))

    found.sort(key=lambda iv: iv.lo)
    return found


def _centered(p: IntPoly, root: Fraction, iv: IsolatingInterval, width: Fraction,
              chain: Optional[SturmChain] = None) -> IsolatingInterval:
    """Interval of width <= `width` centered on an exact rational root, endpoints strictly inside iv"""
    half = min(width / 2, (root - iv.lo) / 2)
    if root < iv.hi:
        half = min(half, (iv.hi - root) / 2)
        return IsolatingInterval(root - half, root + half)

    # root == hi: the right neighbour is unknown, certify with the chain
    chain = chain if chain is not None else build_sturm(p)
    while count_in(chain, root - half, root + half) != 1:
        half /= 2
    return IsolatingInterval(root - half, root + half)


def refine(p: IntPoly, iv: IsolatingInterval, width: RationalLike,
           chain: Optional[SturmChain] = None) -> IsolatingInterval:
    """
    Shrink iv to width <= `width` around the same root

    Bisects on the sign of p. When lo is itself a (neighbouring) root it is
    first moved toward hi with Sturm counts, so the result always has
    sign_at(p, lo) * sign_at(p, hi) < 0. A midpoint or endpoint that hits
    the root exactly gives an interval centered on it.
    """
    width = as_rational(width)
    if width <= 0:
        raise ValueError("refinement width must be positive")
    lo, hi = iv.lo, iv.hi
    s_lo, s_hi = sign_at(p, lo), sign_at(p, hi)
    if iv.width <= width and s_lo and s_hi:
        return iv
    if s_hi == 0:
        return _centered(p, hi, iv, width, chain)

    if s_lo == 0:
        # lo is a neighbouring root outside (lo, hi]; step lo toward hi while the root stays inside
        chain = chain if chain is not None else build_sturm(p)
        step = (hi - lo) / 2
        while count_in(chain, lo + step, hi) != 1:
            step /= 2
        lo += step
        s_lo = sign_at(p, lo)

    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = sign_at(p, mid)
        if s_mid == 0:
            return _centered(p, mid, IsolatingInterval(lo, hi), width, chain)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval(lo, hi)


# ============================================
# Census of Q_n
# ============================================

def sturm_for(n: int, cache: YVCache) -> SturmChain:
    q = generate(n, cache)
    return cache.memo(('sturm', n), lambda: build_sturm(q))


def isolate_for(n: int, cache: YVCache) -> List[IsolatingInterval]:
    q = generate(n, cache)
    return cache.memo(('isolate', n), lambda: isolate(q, sturm_for(n, cache)))


def census(n: int, cache: YVCache) -> RootCensus:
    """Real, negative and positive root counts of Q_n from Sturm data"""
    t0 = time.time()
    chain = sturm_for(n, cache)
    intervals = isolate_for(n, cache)
    negative, positive = chain.negative_count(), chain.positive_count()
    result = RootCensus(
        n=n,
        total=negative + positive + int(chain.zero_root),
        negative=negative,
        positive=positive,
        has_zero_root=chain.zero_root,
        min_root=intervals[0] if intervals else None,
        max_root=intervals[-1] if intervals else None,
    )
    if len(intervals) != result.total:
        logger.warning(f"⚠️ Q_{n}: {len(intervals)} isolating intervals for {result.total} roots")
    logger.debug(f"   census Q_{n}: {result.total} real ({negative}-, {positive}+) "
                 f"in {(time.time() - t0) * 1000:.0f}ms")
    return result


def predicted_counts(n: int) -> Tuple[int, int, int]:
    """(total, negative, positive) real roots of Q_n as predicted in closed form"""
    total = (n + 1) // 2
    negative = (n + 1) // 3
    positive = n // 6 if n % 2 == 0 else (n + 3) // 6
    return total, negative, positive


def verify_count_theorems(n: int, cache: YVCache) -> Tuple[bool, bool]:
    """(total matches, negative and positive both match)"""
    result = census(n, cache)
    total, negative, positive = predicted_counts(n)
    return result.total == total, (result.negative == negative and result.positive == positive)


def _separate(p: IntPoly, a: List[IsolatingInterval], p_chain: SturmChain,
              q: IntPoly, b: List[IsolatingInterval], q_chain: SturmChain) -> int:
    """Refine overlapping pairs across the two lists until every pair is disjoint"""
    rounds = 0
    while True:
        clash_a, clash_b = set(), set()
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                if x.overlaps(y):
                    clash_a.add(i)
                    clash_b.add(j)
        if not clash_a:
            return rounds
        for i in clash_a:
            a[i] = refine(p, a[i], a[i].width / 2, p_chain)
        for j in clash_b:
            b[j] = refine(q, b[j], b[j].width / 2, q_chain)
        rounds += 1


def verify_interlacing(n: int, cache: YVCache) -> Tuple[bool, bool]:
    """
    Roots of Q_{n-1} and Q_{n+1} strictly alternate, Q_{n+1} outermost (flag 1),
    and min Z_{n+1} < min Z_{n-1}, max Z_{n-1} < max Z_{n+1} (flag 2, vacuous
    when Q_{n-1} has no real roots)

    Raises:
        CommonRootDetected: Q_{n-1} and Q_{n+1} are not coprime
    """
    if n < 1:
        raise ValueError("interlacing needs n >= 1")
    generate(n + 1, cache)
    p, q = cache.entries[n - 1], cache.entries[n + 1]
    if not are_coprime(p, q):
        raise CommonRootDetected(f"Q_{n - 1} and Q_{n + 1} share a root")

    inner = list(isolate_for(n - 1, cache))
    outer = list(isolate_for(n + 1, cache))
    rounds = _separate(p, inner, sturm_for(n - 1, cache), q, outer, sturm_for(n + 1, cache))
    logger.debug(f"   interlacing n={n}: separated after {rounds} refinement rounds")

    labels = [tag for _, tag in sorted(
        [(iv.lo, 'inner') for iv in inner] + [(iv.lo, 'outer') for iv in outer]
    )]
    alternates = (
        bool(labels)
        and labels[0] == 'outer'
        and labels[-1] == 'outer'
        and all(x != y for x, y in zip(labels, labels[1:]))
    )

    if not inner:
        extremes = True
    elif not outer:
        extremes = False
    else:
        extremes = outer[0].hi <= inner[0].lo and inner[-1].hi <= outer[-1].lo
    return alternates, extremes


def increment_from_signs(sign_prev: int, sign_next: int) -> Tuple[int, int]:
    """
    (negative, positive) root-count increments from Q_{n-1} to Q_{n+1}
    given sgn Q_{n-1}(0) and sgn Q_{n+1}(0)
    """
    if sign_prev == 0:
        return 1, 1
    if sign_next == 0:
        return 0, 0
    if sign_prev == sign_next:
        return 1, 0
    return 0, 1


def increment_closed_form(n: int) -> Tuple[int, int]:
    negative = 0 if n % 6 in (0, 3) else 1
    positive = 1 if n % 3 == 2 else 0
    return negative, positive


def verify_root_increments(n: int, cache: YVCache) -> Tuple[bool, bool]:
    """census(n+1) - census(n-1) against the sign-case table and the closed form"""
    if n < 1:
        raise ValueError("root increments need n >= 1")
    before, after = census(n - 1, cache), census(n + 1, cache)
    observed = (after.negative - before.negative, after.positive - before.positive)
    by_signs = increment_from_signs(sign_at_zero_predicted(n - 1), sign_at_zero_predicted(n + 1))
    return observed == by_signs, observed == increment_closed_form(n)


def grid_root_count(p: IntPoly, step: RationalLike, bound: Optional[RationalLike] = None) -> int:
    """
    Independent count: exact zeros plus sign alternations of p on the grid
    -B + step, -B + 2 step, ... inside (-B, B). Exact as long as distinct
    roots are more than one step apart.
    """
    if p.degree < 1:
        return 0
    step = as_rational(step)
    bound = as_rational(bound) if bound is not None else dyadic_root_bound(p)

    count, last = 0, 0
    x = -bound + step
    while x < bound:
        s = sign_at(p, x)
        if s == 0:
            count += 1
            last = 0
        else:
            if last and s != last:
                count += 1
            last = s
        x += step
    return count
