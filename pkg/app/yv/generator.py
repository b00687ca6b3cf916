# app/yv/generator.py
"""
Yablonskii-Vorob'ev Polynomial Generator
Builds Q_n from Q_{n+1} Q_{n-1} = z Q_n^2 - 4 (Q_n Q_n'' - Q_n'^2) with
Q_0 = 1, Q_1 = z, caches them on disk and checks their structure
"""
import json
import logging
import os
import tempfile
import threading
import time
from typing import Any, Callable, Dict, Optional, Tuple

from app.algebra.intpoly import (
    IntPoly, ONE, Z,
    are_coprime, derivative, exact_div, sign_at,
)
from app.errors import (
    CacheFormatError, NotDivisible, RecurrenceDivisionFailure, RecursionDivisionFailure,
)
from app.models.structure import StructureReport, Z3_PLAIN, Z3_TIMES_Z

logger = logging.getLogger(__name__)

CACHE_VERSION = 1

# sgn Q_n(0) by n mod 12
_SIGN_AT_ZERO = {
    0: 1, 1: 0, 2: 1, 3: -1, 4: 0, 5: -1,
    6: -1, 7: 0, 8: -1, 9: 1, 10: 0, 11: 1,
}

# sgn x_n (lowest nonzero coefficient) by n mod 12
_LOWEST_COEFF_SIGN = {
    0: 1, 1: 1, 2: 1, 3: -1, 4: 1, 5: -1,
    6: -1, 7: -1, 8: -1, 9: 1, 10: -1, 11: 1,
}


def expected_degree(n: int) -> int:
    return n * (n + 1) // 2


class YVCache:
    """
    Polynomial store keyed by index n

    Entries 0 and 1 are always present. Generation and saving are
    serialized by one re-entrant lock; reads of existing entries are not.
    """

    def __init__(self, source_path: Optional[str] = None):
        self.entries: Dict[int, IntPoly] = {0: ONE, 1: Z}
        self.source_path = source_path
        self._lock = threading.RLock()
        self._memo: Dict[Tuple, Any] = {}
        self._dirty = False

    @property
    def lock(self) -> threading.RLock:
        return self._lock

    @property
    def dirty(self) -> bool:
        return self._dirty

    def __contains__(self, n: int) -> bool:
        return n in self.entries

    def get(self, n: int) -> Optional[IntPoly]:
        return self.entries.get(n)

    def put(self, n: int, poly: IntPoly):
        with self._lock:
            self.entries[n] = poly
            self._dirty = True

    def highest_contiguous(self) -> int:
        """Largest k such that 0..k are all cached"""
        k = 1
        while k + 1 in self.entries:
            k += 1
        return k

    def memo(self, key: Tuple, factory: Callable[[], Any]) -> Any:
        """Cache derived data (Sturm chains, isolations, w_n) for the lifetime of this object"""
        value = self._memo.get(key)
        if value is None:
            with self._lock:
                value = self._memo.get(key)
                if value is None:
                    value = factory()
                    self._memo[key] = value
        return value

    # ============================================
    # Persistence
    # ============================================

    def to_dict(self) -> Dict:
        return {
            'version': CACHE_VERSION,
            'polys': {str(n): self.entries[n].to_json() for n in sorted(self.entries)},
        }

    @classmethod
    def from_dict(cls, data: Any, source_path: Optional[str] = None) -> 'YVCache':
        """
        Rebuild from a parsed cache document

        Raises:
            CacheFormatError: wrong version, bad keys or coefficients, or an entry
                that is not monic of degree n(n+1)/2 in the z^3 pattern
        """
        if not isinstance(data, dict) or data.get('version') != CACHE_VERSION:
            raise CacheFormatError(f"expected a version {CACHE_VERSION} cache document")
        polys = data.get('polys')
        if not isinstance(polys, dict):
            raise CacheFormatError("cache document has no 'polys' object")

        cache = cls(source_path)
        for key, items in polys.items():
            try:
                n = int(key)
                if n < 0 or str(n) != key or not isinstance(items, list):
                    raise ValueError(key)
                poly = IntPoly.from_json(items)
            except ValueError as e:
                raise CacheFormatError(f"bad cache entry {key!r}: {e}") from e
            if poly.degree != expected_degree(n) or poly.lc != 1:
                raise CacheFormatError(f"cache entry {n} is not monic of degree {expected_degree(n)}")
            if z3_pattern(poly, expected_degree(n)) is None:
                raise CacheFormatError(f"cache entry {n} breaks the z^3 coefficient pattern")
            if n in (0, 1) and poly != cache.entries[n]:
                raise CacheFormatError(f"cache entry {n} must be {cache.entries[n].to_text()}")
            cache.entries[n] = poly
        return cache

    @classmethod
    def load(cls, path: str) -> 'YVCache':
        """Read a cache file; a missing file gives a fresh cache bound to that path"""
        if not os.path.exists(path):
            logger.debug(f"🔍 No cache at {path}, starting fresh")
            return cls(path)
        with open(path, 'r', encoding='utf-8') as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as e:
                raise CacheFormatError(f"cache {path} is not valid JSON: {e}") from e
        cache = cls.from_dict(data, path)
        logger.info(f"✓ Loaded {len(cache.entries)} polynomials from {path}")
        return cache

    def save(self, path: Optional[str] = None) -> str:
        """
        Write the cache atomically: temp file in the target directory, then os.replace

        Returns:
            str: the path written
        """
        path = path or self.source_path
        if not path:
            raise ValueError("no cache path to save to")
        with self._lock:
            directory = os.path.dirname(os.path.abspath(path))
            os.makedirs(directory, exist_ok=True)
            fd, tmp_path = tempfile.mkstemp(prefix='.yv-cache-', suffix='.tmp', dir=directory)
            try:
                with os.fdopen(fd, 'w', encoding='utf-8') as fh:
                    json.dump(self.to_dict(), fh)
                    fh.flush()
                    os.fsync(fh.fileno())
                os.replace(tmp_path, path)
            except BaseException:
                if os.path.exists(tmp_path):
                    os.unlink(tmp_path)
                raise
            self.source_path = path
            self._dirty = False
        logger.info(f"✅ Saved {len(self.entries)} polynomials to {path}")
        return path


# ============================================
# Shared caches, one per path
# ============================================

_caches: Dict[str, YVCache] = {}
_caches_lock = threading.Lock()


def get_yv_cache(path: str) -> YVCache:
    """
    Get or load the shared cache for a path
    Thread-safe initialization
    """
    key = os.path.abspath(path)
    cache = _caches.get(key)
    if cache is None:
        with _caches_lock:
            # Double-check locking pattern
            cache = _caches.get(key)
            if cache is None:
                cache = YVCache.load(path)
                _caches[key] = cache
    return cache


def reset_yv_caches():
    with _caches_lock:
        _caches.clear()


# ============================================
# Generation
# ============================================

def recurrence_numerator(q: IntPoly) -> IntPoly:
    """z Q^2 - 4 (Q Q'' - Q'^2), evaluated in that order"""
    d1 = derivative(q, 1)
    d2 = derivative(q, 2)
    return Z * q * q - (q * d2 - d1 * d1).scale(4)


def generate(n: int, cache: YVCache) -> IntPoly:
    """
    Return Q_n, computing every missing index from the highest cached one

    Raises:
        RecurrenceDivisionFailure: a recurrence step left a remainder
    """
    if n < 0:
        raise ValueError("Q_n is defined for n >= 0")
    hit = cache.get(n)
    if hit is not None:
        return hit

    with cache.lock:
        start = cache.highest_contiguous()
        if n <= start:
            return cache.entries[n]

        logger.info(f"🔍 Generating Q_{start + 1}..Q_{n}")
        t0 = time.time()
        prev, cur = cache.entries[start - 1], cache.entries[start]
        for k in range(start, n):
            try:
                nxt = exact_div(recurrence_numerator(cur), prev)
            except NotDivisible as e:
                logger.error(f"❌ Recurrence division failed at Q_{k + 1}: {e}")
                raise RecurrenceDivisionFailure(k + 1) from e
            cache.put(k + 1, nxt)
            logger.debug(f"   Q_{k + 1}: degree {nxt.degree}")
            prev, cur = cur, nxt

        logger.info(f"✅ Generated up to Q_{n} in {(time.time() - t0) * 1000:.0f}ms")
        return cur


# ============================================
# Structure checks
# ============================================

def lowest_coeff_by_recursion(n: int) -> int:
    """
    x_n from x_0 = x_1 = 1 and
        x_{k+1} x_{k-1} = (2k+1) x_k^2   if k = 0 (mod 3)
                        = 4 x_k^2        if k = 1 (mod 3)
                        = -(2k+1) x_k^2  if k = 2 (mod 3)

    Raises:
        RecursionDivisionFailure: a step's division by x_{k-1} is inexact
    """
    if n < 0:
        raise ValueError("x_n is defined for n >= 0")
    prev, cur = 1, 1
    for k in range(1, n):
        r = k % 3
        if r == 0:
            top = (2 * k + 1) * cur * cur
        elif r == 1:
            top = 4 * cur * cur
        else:
            top = -(2 * k + 1) * cur * cur
        nxt, rem = divmod(top, prev)
        if rem:
            raise RecursionDivisionFailure(k + 1)
        prev, cur = cur, nxt
    return cur if n >= 1 else 1


def sign_at_zero_predicted(n: int) -> int:
    return _SIGN_AT_ZERO[n % 12]


def lowest_coeff_sign_predicted(n: int) -> int:
    return _LOWEST_COEFF_SIGN[n % 12]


def z3_pattern(q: IntPoly, degree: int) -> Optional[str]:
    """z^3 structure label of q, None when a coefficient off the pattern is nonzero"""
    residue = degree % 3
    if any(c for i, c in enumerate(q.coeffs) if i % 3 != residue):
        return None
    return Z3_TIMES_Z if residue == 1 else Z3_PLAIN


def verify_structure(n: int, cache: YVCache) -> StructureReport:
    """Degree, monicity, z^3 pattern, x_n and sgn Q_n(0) read off the coefficients"""
    q = generate(n, cache)
    degree = expected_degree(n)

    z3 = z3_pattern(q, degree)
    lowest = next((c for c in q.coeffs if c), 0)
    return StructureReport(
        n=n,
        monic=q.lc == 1,
        degree_ok=q.degree == degree,
        z3_structure=z3,
        lowest_coeff=lowest,
        sign_at_zero=sign_at(q, 0),
    )


def verify_limit_behaviour(n: int, cache: YVCache) -> Tuple[bool, bool]:
    """
    Flags for Q_n -> +inf as z -> +inf, and the predicted sign as z -> -inf
    (-inf for n = 1, 2 mod 4, +inf for n = 0, 3 mod 4)
    """
    q = generate(n, cache)
    if n == 0:
        return True, True
    at_plus = 1 if q.lc > 0 else -1
    at_minus = at_plus if q.degree % 2 == 0 else -at_plus
    predicted_minus = -1 if n % 4 in (1, 2) else 1
    return at_plus == 1, at_minus == predicted_minus


def _wronskian_pieces(n: int, cache: YVCache):
    generate(n + 1, cache)
    p, q, r = cache.entries[n - 1], cache.entries[n], cache.entries[n + 1]
    return (
        [derivative(p, k) for k in range(4)],
        [derivative(q, k) for k in range(3)],
        [derivative(r, k) for k in range(4)],
    )


def verify_wronskian_identities(n: int, cache: YVCache) -> Tuple[bool, bool, bool]:
    """
    Exact checks, with P = Q_{n-1}, Q = Q_n, R = Q_{n+1} and c = 2n+1:
        R' P - R P'             = c Q^2
        R'' P - R P''           = 2c Q Q'
        R''' P - R P'''       = 2c Q'^2 + c Q Q''
    """
    if n < 1:
        raise ValueError("Wronskian identities need n >= 1")
    P, Q, R = _wronskian_pieces(n, cache)
    c = 2 * n + 1

    first = R[1] * P[0] - R[0] * P[1] - (Q[0] * Q[0]).scale(c)
    second = R[2] * P[0] - R[0] * P[2] - (Q[0] * Q[1]).scale(2 * c)
    third = (R[3] * P[0] - R[0] * P[3]
             - (Q[1] * Q[1]).scale(2 * c) - (Q[0] * Q[2]).scale(c))
    return first.is_zero, second.is_zero, third.is_zero


def coprimality_report(n: int, cache: YVCache) -> Tuple[bool, bool, bool]:
    """gcd(Q_n, Q_n'), gcd(Q_{n-1}, Q_n), gcd(Q_{n-1}, Q_{n+1}) all constant"""
    if n < 1:
        raise ValueError("coprimality report needs n >= 1")
    generate(n + 1, cache)
    p, q, r = cache.entries[n - 1], cache.entries[n], cache.entries[n + 1]
    return are_coprime(q, derivative(q)), are_coprime(p, q), are_coprime(p, r)
