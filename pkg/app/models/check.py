# app/models/check.py
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check at one index"""

    n: int
    check: str
    passed: bool
    detail: Optional[str] = None

    def __repr__(self):
        return f'<CheckResult n={self.n} {self.check} {"PASS" if self.passed else "FAIL"}>'

    def to_dict(self):
        """Convert to dictionary for JSON reports"""
        return {
            'n': self.n,
            'check': self.check,
            'passed': self.passed,
            'detail': self.detail,
        }
