# app/algebra/__init__.py
"""
Exact polynomial and rational-function arithmetic
"""
from app.algebra.intpoly import (
    IntPoly, Rational, ZERO, ONE, Z, ZERO_DEGREE,
    arith, derivative, exact_div, pseudo_remainder, gcd_primitive,
    content, primitive_part, decimate, inflate, is_squarefree, are_coprime,
    eval_at, sign_at, cauchy_bound, dyadic_root_bound,
    as_rational, rational_to_str,
)
from app.algebra.ratfunc import (
    RationalFunction, rf_arith, rf_derivative, rf_pow, rf_neg, rf_eval,
)

__all__ = [
    'IntPoly', 'Rational', 'ZERO', 'ONE', 'Z', 'ZERO_DEGREE',
    'arith', 'derivative', 'exact_div', 'pseudo_remainder', 'gcd_primitive',
    'content', 'primitive_part', 'decimate', 'inflate', 'is_squarefree', 'are_coprime',
    'eval_at', 'sign_at', 'cauchy_bound', 'dyadic_root_bound',
    'as_rational', 'rational_to_str',
    'RationalFunction', 'rf_arith', 'rf_derivative', 'rf_pow', 'rf_neg', 'rf_eval',
]
