from fractions import Fraction
from typing import List, Optional, Sequence

COLUMNS = ['d', 'N', 'K', 'n', 'integral', 'provenance', 'N ~ (display only)']


def _cell(value) -> str:
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    return str(value)


def _approx(value: Optional[Fraction]) -> str:
    return '-' if value is None else f'{float(value):.6g}'


def render(header: Sequence[str], rows: List[Sequence[str]]) -> str:
    widths = [max(len(str(cell)) for cell in column) for column in zip(header, *rows)]
    lines = ['  '.join(str(cell).rjust(w) for cell, w in zip(header, widths))]
    lines.append('  '.join('-' * w for w in widths))
    for row in rows:
        lines.append('  '.join(str(cell).rjust(w) for cell, w in zip(row, widths)))
    return '\n'.join(lines)


def results_to_table(results) -> str:
    """Human-readable table; the decimal column is an approximation for display"""
    rows = []
    for record in results:
        shown = record.N if record.N is not None else record.K
        rows.append(
            [
                str(record.degree),
                _cell(record.N),
                _cell(record.K),
                _cell(record.n),
                _cell(record.integral),
                _cell(record.provenance),
                _approx(shown),
            ]
        )
    lines = []
    if results.geometry is not None:
        lines.append(f'geometry: {results.geometry}')
    lines.append(render(COLUMNS, rows) if rows else '(no degrees requested)')
    if results.pipelinesAgree is not None:
        lines.append(f'pipelines agree: {"yes" if results.pipelinesAgree else "no"}')
    if results.elapsed is not None:
        lines.append(f'elapsed: {results.elapsed:.2f} s')
    return '\n'.join(lines)


def checks_to_table(report) -> str:
    rows = [[check.name, 'PASS' if check.passed else 'FAIL', check.detail or ''] for check in report]
    summary = 'all checks passed' if report.passed else 'some checks FAILED'
    return render(['check', 'result', 'detail'], rows) + '\n' + summary


def cache_entries_to_table(entries) -> str:
    rows = [
        [e['file'], str(e['r']), str(e['d']), str(e['marks']), _cell(e['graphs']), _cell(e['valid'])]
        for e in entries
    ]
    if not rows:
        return '(graph cache is empty)'
    return render(['file', 'r', 'd', 'marks', 'graphs', 'valid'], rows)
