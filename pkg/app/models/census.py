# app/models/census.py
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from app.algebra.intpoly import RationalLike, as_rational, rational_to_str


@dataclass(frozen=True)
class IsolatingInterval:
    """Half-open interval (lo, hi] holding exactly one real root"""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'lo', as_rational(self.lo))
        object.__setattr__(self, 'hi', as_rational(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi}]")

    def __repr__(self):
        return f'<IsolatingInterval ({self.lo}, {self.hi}]>'

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: RationalLike) -> bool:
        x = as_rational(x)
        return self.lo < x <= self.hi

    def overlaps(self, other: 'IsolatingInterval') -> bool:
        return max(self.lo, other.lo) < min(self.hi, other.hi)

    def to_list(self) -> List[str]:
        return [rational_to_str(self.lo), rational_to_str(self.hi)]


@dataclass(frozen=True)
class RootCensus:
    """Real-root counts of Q_n with its extreme isolating intervals"""

    n: int
    total: int
    negative: int
    positive: int
    has_zero_root: bool
    min_root: Optional[IsolatingInterval]
    max_root: Optional[IsolatingInterval]

    def __post_init__(self):
        if self.total != self.negative + self.positive + int(self.has_zero_root):
            raise ValueError(f"inconsistent census for Q_{self.n}")

    def __repr__(self):
        return f'<RootCensus Q_{self.n} total={self.total} neg={self.negative} pos={self.positive}>'

    def to_dict(self):
        """Convert to dictionary for JSON reports"""
        return {
            'n': self.n,
            'total': self.total,
            'negative': self.negative,
            'positive': self.positive,
            'zero': self.has_zero_root,
            'min': self.min_root.to_list() if self.min_root else None,
            'max': self.max_root.to_list() if self.max_root else None,
        }
