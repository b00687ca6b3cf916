# app/errors.py
"""
Exception hierarchy for yv-census

Arithmetic invariant errors mean the exact arithmetic itself went wrong
(the theory guarantees the divisions involved are exact). Theorem
violations mean a checked property failed on concrete data.
"""


class YVError(Exception):
    """Base class for every error raised by the app package"""


# ============================================
# Arithmetic invariants (CLI exit code 2)
# ============================================

class ArithmeticInvariantError(YVError, ArithmeticError):
    """An exact operation produced a result the theory rules out"""


class NotDivisible(ArithmeticInvariantError):
    """exact_div found a nonzero remainder"""


class DegreeZero(ArithmeticInvariantError):
    """A root bound was requested for a constant polynomial"""


class RecurrenceDivisionFailure(ArithmeticInvariantError):
    """Q_{n+1} recurrence numerator not divisible by Q_{n-1}"""

    def __init__(self, n: int, message: str = ''):
        self.n = n
        super().__init__(message or f"recurrence division inexact while building Q_{n}")


class RecursionDivisionFailure(ArithmeticInvariantError):
    """x_{n+1} recursion numerator not divisible by x_{n-1}"""

    def __init__(self, n: int, message: str = ''):
        self.n = n
        super().__init__(message or f"lowest-coefficient recursion inexact while building x_{n}")


# ============================================
# Theorem checks (CLI exit code 3)
# ============================================

class TheoremViolation(YVError):
    """A property that must hold for Yablonskii-Vorob'ev polynomials failed"""


class NotSquarefree(TheoremViolation):
    """gcd(p, p') is not constant, so p has a repeated root"""


class CommonRootDetected(TheoremViolation):
    """Two polynomials expected to be coprime share a root"""


# ============================================
# Storage (CLI exit code 1)
# ============================================

class CacheFormatError(YVError, ValueError):
    """Cache document is not a valid version-1 polynomial cache"""
