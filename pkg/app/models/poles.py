# app/models/poles.py
from dataclasses import dataclass

from app.models.census import RootCensus


@dataclass(frozen=True)
class PoleSide:
    """Real poles of w_n sharing one residue"""

    total: int
    negative: int
    positive: int
    at_zero: bool

    @classmethod
    def from_census(cls, census: RootCensus) -> 'PoleSide':
        return cls(census.total, census.negative, census.positive, census.has_zero_root)

    def to_dict(self):
        return {
            'total': self.total,
            'negative': self.negative,
            'positive': self.positive,
            'zero': self.at_zero,
        }


@dataclass(frozen=True)
class PoleCensus:
    """
    Real poles of w_n: residue +1 at the roots of Q_{n-1},
    residue -1 at the roots of Q_n
    """

    n: int
    poles_residue_plus: PoleSide
    poles_residue_minus: PoleSide

    def __repr__(self):
        return f'<PoleCensus w_{self.n} +1:{self.poles_residue_plus.total} -1:{self.poles_residue_minus.total}>'

    @property
    def total(self) -> int:
        return self.poles_residue_plus.total + self.poles_residue_minus.total

    @property
    def negative(self) -> int:
        return self.poles_residue_plus.negative + self.poles_residue_minus.negative

    @property
    def positive(self) -> int:
        return self.poles_residue_plus.positive + self.poles_residue_minus.positive

    def to_dict(self):
        """Convert to dictionary for JSON reports"""
        return {
            'n': self.n,
            'total': self.total,
            'negative': self.negative,
            'positive': self.positive,
            'residue_plus': self.poles_residue_plus.to_dict(),
            'residue_minus': self.poles_residue_minus.to_dict(),
        }
