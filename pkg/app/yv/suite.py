# app/yv/suite.py
"""
Verification Suite
Runs the named check groups over a range of indices against one cache
"""
import logging
import time
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from app.models.check import CheckResult
from app.utils.logger import log_check_result, log_performance
from app.yv.census import (
    census, grid_root_count, isolate_for, predicted_counts,
    verify_count_theorems, verify_interlacing, verify_root_increments,
)
from app.yv.generator import (
    YVCache, generate, lowest_coeff_by_recursion, lowest_coeff_sign_predicted,
    sign_at_zero_predicted, verify_limit_behaviour, verify_structure,
    verify_wronskian_identities, coprimality_report,
)
from app.yv.painleve import SIDE_MINUS, SIDE_PLUS, residue_check, verify_p2

logger = logging.getLogger(__name__)


class VerificationSuite:
    """Check groups selectable from the command line"""

    GROUPS = ('structure', 'identities', 'census', 'interlace', 'p2')

    # the grid oracle walks every 2^-k step across the root bound
    GRID_MAX_N = 8

    def __init__(self, cache: YVCache, grid_step: Fraction = Fraction(1, 1024),
                 residue_width: Optional[Fraction] = None,
                 residue_offset: Optional[Fraction] = None,
                 residue_tolerance: Optional[Fraction] = None):
        self.cache = cache
        self.grid_step = grid_step
        self.residue_kwargs = {
            k: v for k, v in (
                ('width', residue_width),
                ('offset', residue_offset),
                ('tolerance', residue_tolerance),
            ) if v is not None
        }

    def prepare(self, indices: List[int]):
        """Sequential generation pass so every check reads an already-filled cache"""
        if indices:
            generate(max(indices) + 1, self.cache)

    def run(self, indices: Iterable[int], groups: Iterable[str]) -> List[CheckResult]:
        indices = list(indices)
        groups = [g for g in self.GROUPS if g in set(groups)]
        self.prepare(indices)

        results = []
        for n in indices:
            for group in groups:
                t0 = time.time()
                batch = getattr(self, f'check_{group}')(n)
                for result in batch:
                    log_check_result(logger, n, result.check, result.passed, result.detail)
                results.extend(batch)
                logger.debug(f"   n={n} {group}: {(time.time() - t0) * 1000:.0f}ms")
        return results

    # ============================================
    # Groups
    # ============================================

    def check_structure(self, n: int) -> List[CheckResult]:
        report = verify_structure(n, self.cache)
        by_recursion = lowest_coeff_by_recursion(n)
        predicted_sign = sign_at_zero_predicted(n)
        x_sign = (report.lowest_coeff > 0) - (report.lowest_coeff < 0)
        at_plus, at_minus = verify_limit_behaviour(n, self.cache)
        return [
            CheckResult(n, 'structure', report.passed,
                        f"degree_ok={report.degree_ok} monic={report.monic} z3={report.z3_structure}"),
            CheckResult(n, 'lowest_coeff',
                        report.lowest_coeff == by_recursion and x_sign == lowest_coeff_sign_predicted(n),
                        f"x_n={report.lowest_coeff} recursion={by_recursion}"),
            CheckResult(n, 'sign_at_zero',
                        report.sign_at_zero == predicted_sign and (predicted_sign == 0) == (n % 3 == 1),
                        f"sign={report.sign_at_zero} predicted={predicted_sign}"),
            CheckResult(n, 'limits', at_plus and at_minus, f"plus_inf={at_plus} minus_inf={at_minus}"),
        ]

    def check_identities(self, n: int) -> List[CheckResult]:
        if n < 1:
            return []
        wronskian = verify_wronskian_identities(n, self.cache)
        coprime = coprimality_report(n, self.cache)
        return [
            CheckResult(n, 'wronskian', all(wronskian), f"flags={_flags(wronskian)}"),
            CheckResult(n, 'coprimality', all(coprime), f"flags={_flags(coprime)}"),
        ]

    def check_census(self, n: int) -> List[CheckResult]:
        result = census(n, self.cache)
        total_ok, signs_ok = verify_count_theorems(n, self.cache)
        total, negative, positive = predicted_counts(n)
        out = [
            CheckResult(n, 'counts', total_ok and signs_ok,
                        f"total={result.total} negative={result.negative} positive={result.positive} "
                        f"zero={'yes' if result.has_zero_root else 'no'} "
                        f"predicted={total}/{negative}/{positive}"),
        ]
        if n >= 1:
            by_signs, closed = verify_root_increments(n, self.cache)
            out.append(CheckResult(n, 'increments', by_signs and closed,
                                   f"sign_table={by_signs} closed_form={closed}"))
        if n <= self.GRID_MAX_N:
            grid = grid_root_count(self.cache.entries[n], self.grid_step)
            out.append(CheckResult(n, 'grid_oracle', grid == result.total,
                                   f"grid={grid} sturm={result.total}"))
        return out

    def check_interlace(self, n: int) -> List[CheckResult]:
        if n < 1:
            return []
        alternates, extremes = verify_interlacing(n, self.cache)
        return [CheckResult(n, 'interlacing', alternates and extremes,
                            f"alternates={alternates} min_max={extremes}")]

    def check_p2(self, n: int) -> List[CheckResult]:
        plus, minus = verify_p2(n, self.cache), verify_p2(-n, self.cache)
        out = [CheckResult(n, 'p2', plus and minus, f"w_n={plus} w_-n={minus}")]
        if n >= 1:
            samples = []
            for side, index in ((SIDE_PLUS, n - 1), (SIDE_MINUS, n)):
                intervals = isolate_for(index, self.cache)
                if intervals:
                    samples.append(residue_check(n, self.cache, intervals[0], side, **self.residue_kwargs))
            out.append(CheckResult(n, 'residues', all(samples), f"samples={len(samples)}"))
        return out


def _flags(values) -> str:
    return ''.join('T' if v else 'F' for v in values)


def summarize(results: List[CheckResult]) -> Dict:
    failed = [r for r in results if not r.passed]
    return {'checked': len(results), 'failed': len(failed), 'passed': not failed}


def timed_run(suite: VerificationSuite, indices: List[int], groups: List[str]) -> List[CheckResult]:
    t0 = time.time()
    results = suite.run(indices, groups)
    log_performance(logger, f"verify {len(indices)} indices", (time.time() - t0) * 1000,
                    success=all(r.passed for r in results))
    return results
