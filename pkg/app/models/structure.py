# app/models/structure.py
from dataclasses import dataclass
from typing import Optional

# z^3 structure labels
Z3_PLAIN = 'Z[z^3]'
Z3_TIMES_Z = 'z*Z[z^3]'


@dataclass(frozen=True)
class StructureReport:
    """Facts about Q_n read directly from its coefficients"""

    n: int
    monic: bool
    degree_ok: bool
    z3_structure: Optional[str]  # None when neither pattern holds
    lowest_coeff: int            # x_n
    sign_at_zero: int

    def __repr__(self):
        return f'<StructureReport Q_{self.n} {self.z3_structure} x={self.lowest_coeff}>'

    def expected_z3(self) -> str:
        return Z3_TIMES_Z if self.n % 3 == 1 else Z3_PLAIN

    @property
    def passed(self) -> bool:
        return self.monic and self.degree_ok and self.z3_structure == self.expected_z3()

    def to_dict(self):
        """Convert to dictionary for reports"""
        return {
            'n': self.n,
            'monic': self.monic,
            'degree_ok': self.degree_ok,
            'z3_structure': self.z3_structure,
            'lowest_coeff': str(self.lowest_coeff),
            'sign_at_zero': self.sign_at_zero,
        }
