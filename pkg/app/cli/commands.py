# app/cli/commands.py
"""
Command-line surface: generate, verify, census, plot, plot-w

Exit codes:
    0  every requested check passed
    1  cache or other I/O failure
    2  arithmetic invariant violated (inexact recurrence division, ...)
    3  a theorem check failed
    64 command-line usage error (bad range, out-of-range option)
"""
import functools
import time
from fractions import Fraction
from typing import List, Optional

import click

from app.algebra.intpoly import eval_at
from app.algebra.ratfunc import rf_eval
from app.cli.formatting import (
    RATIONAL, check_lines, format_number, to_csv, to_json, to_table,
)
from app.errors import ArithmeticInvariantError, CacheFormatError, TheoremViolation
from app.utils.logger import log_performance, log_run_start
from app.yv.census import census, predicted_counts, refine, sturm_for
from app.yv.generator import YVCache, generate, get_yv_cache
from app.yv.painleve import rational_solution
from app.yv.suite import VerificationSuite, summarize, timed_run

EXIT_IO = 1
EXIT_ARITHMETIC = 2
EXIT_THEOREM = 3
EXIT_USAGE = 64


class YVCommand(click.Command):
    """click command whose usage errors exit with EXIT_USAGE"""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


def exit_codes(app):
    """Map library exceptions to the documented exit codes"""

    def decorator(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            ctx = click.get_current_context()
            try:
                return fn(*args, **kwargs)
            except ArithmeticInvariantError as e:
                app.logger.error(f"❌ Arithmetic invariant violated: {e}", exc_info=True)
                click.echo(f"❌ {type(e).__name__}: {e}", err=True)
                ctx.exit(EXIT_ARITHMETIC)
            except TheoremViolation as e:
                app.logger.error(f"❌ Theorem check failed: {e}", exc_info=True)
                click.echo(f"❌ {type(e).__name__}: {e}", err=True)
                ctx.exit(EXIT_THEOREM)
            except (OSError, CacheFormatError) as e:
                app.logger.error(f"❌ Cache or I/O failure: {e}", exc_info=True)
                click.echo(f"❌ {type(e).__name__}: {e}", err=True)
                ctx.exit(EXIT_IO)
        return wrapper

    return decorator


def resolve_indices(start: Optional[int], up_to: Optional[int], default_up_to: int) -> List[int]:
    """[start] alone, start..up_to, or 0..up_to (default range when neither is given)"""
    if start is not None and up_to is None:
        return [start]
    first = start if start is not None else 0
    last = up_to if up_to is not None else default_up_to
    if first > last:
        raise click.UsageError(f"empty range {first}..{last}")
    return list(range(first, last + 1))


def sample_points(lo: Fraction, hi: Fraction, samples: int) -> List[Fraction]:
    step = (hi - lo) / (samples - 1)
    return [lo + i * step for i in range(samples)]


def register_commands(app):
    """Register CLI commands"""

    def open_cache(cache_path: Optional[str]) -> YVCache:
        return get_yv_cache(cache_path or app.config['YV_CACHE'])

    def persist(cache: YVCache):
        if cache.dirty:
            cache.save()

    cache_option = click.option('--cache', 'cache_path', default=None,
                                help='Cache JSON path (default: YV_CACHE)')

    # ============================================
    # generate
    # ============================================

    @app.cli.command('generate', cls=YVCommand)
    @click.argument('n', type=click.IntRange(min=0))
    @click.option('--up-to', 'up_to', is_flag=True, help='Emit Q_0 .. Q_N, one per line')
    @cache_option
    @click.option('--format', 'fmt', type=click.Choice(['json', 'text']), default='json')
    @exit_codes(app)
    def generate_command(n, up_to, cache_path, fmt):
        """Build Q_N by the recurrence and print its coefficients"""
        cache = open_cache(cache_path)
        t0 = time.time()
        generate(n, cache)
        persist(cache)
        log_performance(app.logger, f"generate Q_{n}", (time.time() - t0) * 1000)

        for k in (range(n + 1) if up_to else [n]):
            poly = cache.entries[k]
            click.echo(to_json(poly.to_json()) if fmt == 'json' else poly.to_text())

    # ============================================
    # verify
    # ============================================

    @app.cli.command('verify', cls=YVCommand)
    @click.argument('start', type=click.IntRange(min=0), required=False)
    @click.option('--up-to', 'up_to', type=click.IntRange(min=0), default=None)
    @cache_option
    @click.option('--format', 'fmt', type=click.Choice(['text', 'json']), default=None)
    @click.option('--all', 'all_checks', is_flag=True, help='Every check group (default)')
    @click.option('--structure', is_flag=True, help='Degree, monicity, z^3 pattern, x_n, signs, limits')
    @click.option('--identities', is_flag=True, help='Wronskian identities and coprimality')
    @click.option('--census', 'census_group', is_flag=True, help='Root counts, increments, grid oracle')
    @click.option('--interlace', is_flag=True, help='Interlacing of Q_{n-1} and Q_{n+1}')
    @click.option('--p2', is_flag=True, help='Painleve II for w_n and w_-n, residue checks')
    @exit_codes(app)
    def verify_command(start, up_to, cache_path, fmt, all_checks, structure, identities,
                       census_group, interlace, p2):
        """Run theorem checks; exit 0 only if all pass"""
        indices = resolve_indices(start, up_to, app.config['DEFAULT_UP_TO'])
        selected = {
            'structure': structure, 'identities': identities, 'census': census_group,
            'interlace': interlace, 'p2': p2,
        }
        groups = [g for g in VerificationSuite.GROUPS if all_checks or selected[g]]
        if not groups:
            groups = list(VerificationSuite.GROUPS)
        fmt = fmt or ('json' if app.config['OUTPUT_FORMAT'] == 'json' else 'text')

        log_run_start(app.logger, f"verify [{', '.join(groups)}]", indices)
        cache = open_cache(cache_path)
        suite = VerificationSuite(
            cache,
            grid_step=app.config['GRID_STEP'],
            residue_width=app.config['RESIDUE_WIDTH'],
            residue_offset=app.config['RESIDUE_OFFSET'],
            residue_tolerance=app.config['RESIDUE_TOLERANCE'],
        )
        checks = timed_run(suite, indices, groups)
        persist(cache)

        summary = summarize(checks)
        results = [r.to_dict() for r in checks]
        if fmt == 'json':
            click.echo(to_json({
                'range': [indices[0], indices[-1]],
                'checks': groups,
                'results': results,
                'passed': summary['passed'],
            }))
        else:
            for line in check_lines(results):
                click.echo(line)
            if summary['passed']:
                click.echo(f"✓ all {summary['checked']} checks passed")
            else:
                click.echo(f"❌ {summary['failed']} of {summary['checked']} checks failed")

        if not summary['passed']:
            app.logger.error(f"❌ {summary['failed']} checks failed")
            click.get_current_context().exit(EXIT_THEOREM)

    # ============================================
    # census
    # ============================================

    @app.cli.command('census', cls=YVCommand)
    @click.argument('start', type=click.IntRange(min=0), required=False)
    @click.option('--up-to', 'up_to', type=click.IntRange(min=0), default=None)
    @cache_option
    @click.option('--format', 'fmt', type=click.Choice(['text', 'json', 'csv']), default=None)
    @click.option('--width', type=RATIONAL, default=None,
                  help='Refine the min/max root intervals to this width (default REFINE_WIDTH)')
    @exit_codes(app)
    def census_command(start, up_to, cache_path, fmt, width):
        """Table of real / negative / positive root counts against the closed forms"""
        indices = resolve_indices(start, up_to, app.config['DEFAULT_UP_TO'])
        fmt = fmt or app.config['OUTPUT_FORMAT']
        width = width if width is not None else app.config['REFINE_WIDTH']
        log_run_start(app.logger, "census", indices)

        cache = open_cache(cache_path)
        generate(indices[-1], cache)
        persist(cache)

        records = []
        for n in indices:
            result = census(n, cache)
            data = result.to_dict()
            chain = sturm_for(n, cache)
            for key, iv in (('min', result.min_root), ('max', result.max_root)):
                if iv is not None:
                    data[key] = refine(cache.entries[n], iv, width, chain).to_list()
            total, negative, positive = predicted_counts(n)
            data.update({
                'predicted_total': total,
                'predicted_negative': negative,
                'predicted_positive': positive,
                'total_ok': result.total == total,
                'signs_ok': result.negative == negative and result.positive == positive,
            })
            if not (data['total_ok'] and data['signs_ok']):
                app.logger.warning(f"⚠️ Q_{n} census differs from the closed forms")
            records.append(data)

        if fmt == 'json':
            click.echo(to_json(records))
            return

        columns = ['n', 'total', 'negative', 'positive', 'zero',
                   'pred_total', 'pred_negative', 'pred_positive', 'total_ok', 'signs_ok']
        rows = [[
            d['n'], d['total'], d['negative'], d['positive'], int(d['zero']),
            d['predicted_total'], d['predicted_negative'], d['predicted_positive'],
            int(d['total_ok']), int(d['signs_ok']),
        ] for d in records]
        if fmt == 'csv':
            click.echo(to_csv(columns, rows), nl=False)
        else:
            click.echo(to_table(columns, rows))

    # ============================================
    # plot / plot-w
    # ============================================

    def plot_options(fn):
        fn = click.option('--exact', is_flag=True, help='Exact rationals instead of decimals')(fn)
        fn = click.option('--samples', type=click.IntRange(min=2), default=81, show_default=True)(fn)
        fn = click.option('--range', 'sample_range', type=(RATIONAL, RATIONAL),
                          default=(Fraction(-4), Fraction(4)), show_default=True)(fn)
        return cache_option(fn)

    def emit_samples(label, values):
        click.echo(to_csv(['x', label], values), nl=False)

    @app.cli.command('plot', cls=YVCommand)
    @click.argument('n', type=click.IntRange(min=0))
    @plot_options
    @exit_codes(app)
    def plot_command(n, sample_range, samples, exact, cache_path):
        """CSV samples x, Q_N(x)"""
        lo, hi = sample_range
        if not lo < hi:
            raise click.BadParameter('range must satisfy A < B', param_hint='--range')
        cache = open_cache(cache_path)
        poly = generate(n, cache)
        persist(cache)

        digits = app.config['PLOT_DIGITS']
        rows = [[format_number(x, exact, digits), format_number(eval_at(poly, x), exact, digits)]
                for x in sample_points(lo, hi, samples)]
        emit_samples(f"Q_{n}(x)", rows)

    @app.cli.command('plot-w', cls=YVCommand)
    @click.argument('n', type=int)
    @plot_options
    @exit_codes(app)
    def plot_w_command(n, sample_range, samples, exact, cache_path):
        """CSV samples x, w_N(x); poles are empty cells"""
        lo, hi = sample_range
        if not lo < hi:
            raise click.BadParameter('range must satisfy A < B', param_hint='--range')
        cache = open_cache(cache_path)
        generate(abs(n), cache)
        persist(cache)
        w = rational_solution(n, cache)

        digits = app.config['PLOT_DIGITS']
        rows = [[format_number(x, exact, digits), format_number(rf_eval(w, x), exact, digits)]
                for x in sample_points(lo, hi, samples)]
        emit_samples(f"w_{n}(x)", rows)
