# app/cli/formatting.py
"""
Renderers shared by the CLI commands: compact JSON, CSV and aligned text
"""
import csv
import io
import json
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import click


class RationalType(click.ParamType):
    """Accepts "3", "-1/2", "0.125" and "2^-20" """

    name = 'rational'

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        text = str(value).strip()
        try:
            if '^' in text:
                base, exponent = text.split('^', 1)
                return Fraction(int(base)) ** int(exponent)
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


RATIONAL = RationalType()


def to_json(data) -> str:
    return json.dumps(data, separators=(',', ':'))


def format_number(value: Optional[Fraction], exact: bool, digits: int) -> str:
    """Exact "p/q" (or "p") string, or a decimal with `digits` significant digits; None -> ''"""
    if value is None:
        return ''
    if exact:
        return str(value)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def to_csv(columns: Sequence[str], rows: List[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    writer.writerows(rows)
    return buffer.getvalue()


def to_table(columns: Sequence[str], rows: List[Sequence]) -> str:
    cells = [[str(c) for c in columns]] + [[str(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ['  '.join(cell.rjust(widths[i]) for i, cell in enumerate(row)) for row in cells]
    lines.insert(1, '  '.join('-' * w for w in widths))
    return '\n'.join(lines)


def check_lines(results: List[Dict]) -> List[str]:
    """Per-check text lines: "n=21  counts       PASS  total=11 ..." """
    lines = []
    for r in results:
        status = 'PASS' if r['passed'] else 'FAIL'
        line = f"n={r['n']:<4} {r['check']:<13} {status}"
        if r.get('detail'):
            line += f"  {r['detail']}"
        lines.append(line)
    return lines
