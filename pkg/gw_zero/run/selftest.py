from collections import UserList
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from gw_zero import GW_LOGGER
from gw_zero.GWResults import rational_str
from gw_zero.GeometryConfig import GeometryConfig
from gw_zero.cohomology.schubert import schubert_line_count
from gw_zero.constants import INTERNAL, METHOD
from gw_zero.exceptions import GWError
from gw_zero.export.jsonlite import checks_to_jsonlite
from gw_zero.export.table import checks_to_table
from gw_zero.localization.cache import GraphCache
from gw_zero.localization.contribution import graph_contribution
from gw_zero.localization.integrals import euler_integral, fixed_graphs, one_point_correlator
from gw_zero.localization.weights import draw_weights
from gw_zero.mirror.JSeries import MirrorConfig
from gw_zero.mirror.assemble import assemble_j_from_correlators
from gw_zero.mirror.extract import extract_gw
from gw_zero.mirror.i_function import i_function
from gw_zero.mirror.mirror_map import mirror_map

# (geometry, expected d=1 line count)
LINE_COUNTS = [('quintic', 2875), ('cubic-surface', 27), ('quadric-intersection', 16)]


class CheckResult:
    __slots__ = ('name', 'passed', 'detail')

    def __init__(self, name: str, passed: bool, detail: str = ''):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def to_dict(self) -> Dict:
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail}

    def __repr__(self):
        return f'CheckResult({self.to_dict()})'


class SelftestReport(UserList):
    """Outcome of every cross-oracle check, in the order they ran"""

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self if not check.passed]

    def jsonlite(self):
        return checks_to_jsonlite(self)

    def table(self) -> str:
        return checks_to_table(self)


def _mirror_table(geometry: GeometryConfig, D: int) -> List[Fraction]:
    cfg = MirrorConfig(geometry, D)
    _, J = mirror_map(i_function(cfg))
    return extract_gw(J, cfg)


def _render(value) -> str:
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(rational_str(v) for v in value) + ']'
    return rational_str(value)


def _compare(expected, actual) -> Tuple[bool, str]:
    if expected == actual:
        return True, _render(actual)
    return False, f'expected {_render(expected)}, got {_render(actual)}'


class _Suite:
    def __init__(self, seed: int, processes: int, cache: Optional[GraphCache]):
        self.seed = seed
        self.processes = processes
        self.cache = cache

    def integral(self, geometry: GeometryConfig, d: int, seed: Optional[int] = None) -> Fraction:
        seed = self.seed if seed is None else seed
        return euler_integral(geometry, d, None, seed, self.processes, self.cache)

    def cache_validation(self) -> Tuple[bool, str]:
        if self.cache is None:
            return True, 'no cache directory configured'
        report = self.cache.validate()
        problems = [f'{name}: {problem}' for name, problem in report if problem is not None]
        if problems:
            return False, '; '.join(problems)
        return True, f'{len(report)} cache files match a fresh enumeration'

    def schubert_lines(self, name: str, expected: int) -> Tuple[bool, str]:
        geometry = GeometryConfig.named(name)
        schubert = schubert_line_count(geometry.r, list(geometry.bundle.convex_degrees))
        localized = self.integral(geometry, 1)
        values = {'schubert': schubert, 'localization': localized}
        if geometry.is_extractable(1):
            values['mirror'] = _mirror_table(geometry, 1)[0]
        passed = all(v == expected for v in values.values())
        return passed, ', '.join(f'{k}={v}' for k, v in values.items())

    def quintic_pipelines(self) -> Tuple[bool, str]:
        geometry = GeometryConfig.named('quintic')
        localized = [self.integral(geometry, d) for d in (1, 2)]
        return _compare(_mirror_table(geometry, 2), localized)

    def weight_independence(self) -> Tuple[bool, str]:
        geometry = GeometryConfig.named('quintic')
        values = {self.integral(geometry, 1, self.seed + k) for k in range(3)}
        return len(values) == 1, f'{len(values)} distinct values: {sorted(values)}'

    def local_p1(self) -> Tuple[bool, str]:
        geometry = GeometryConfig.named('local-p1')
        values = [self.integral(geometry, d) for d in (1, 2, 3)]
        return _compare([Fraction(1, d**3) for d in (1, 2, 3)], values)

    def j_closed_form(self, name: str, D: int) -> Tuple[bool, str]:
        geometry = GeometryConfig.named(name)
        _, J = mirror_map(i_function(MirrorConfig(geometry, D)))
        bracket = assemble_j_from_correlators(
            geometry, D, METHOD.TWIST_NONE, self.seed, self.processes, self.cache
        )
        if bracket.agrees_with(J):
            return True, f'correlator bracket matches the hypergeometric series through q^{D}'
        first = next(d for d in range(D + 1) if bracket[d] != J[d])
        return False, f'q^{first}: bracket {bracket[first]} vs hypergeometric {J[first]}'

    def p1_descendants(self) -> Tuple[bool, str]:
        geometry = GeometryConfig.named('p1')
        values = [
            one_point_correlator(geometry, 1, n, a, METHOD.TWIST_NONE, self.seed, self.processes, self.cache)
            for n, a in ((0, 1), (1, 0))
        ]
        return _compare([Fraction(1), Fraction(-2)], values)

    def quintic_kernel(self) -> Tuple[bool, str]:
        geometry = GeometryConfig.named('quintic')
        _, J = mirror_map(i_function(MirrorConfig(geometry, 1)))
        bracket = assemble_j_from_correlators(
            geometry, 1, METHOD.TWIST_KERNEL, self.seed, self.processes, self.cache
        )
        euler = geometry.euler_class()
        if bracket.times_class(euler).agrees_with(J.times_class(euler)):
            return True, 'Euler(V) times the kernel-twisted bracket matches Euler(V) times J at q^1'
        return False, 'kernel-twisted bracket and J disagree at q^1'

    def divisor_axiom(self) -> Tuple[bool, str]:
        geometry = GeometryConfig.named('quintic')
        degree = 1
        for l in geometry.bundle.convex_degrees:
            degree *= l
        correlator = one_point_correlator(
            geometry, 1, 0, 2, METHOD.TWIST_KERNEL, self.seed, self.processes, self.cache
        )
        return _compare(self.integral(geometry, 1), correlator * degree)

    def kernel_identity(self) -> Tuple[bool, str]:
        geometry = GeometryConfig.named('quintic')
        weights = draw_weights(geometry.r, self.seed)
        lam = weights.as_fractions()
        graphs = fixed_graphs(geometry.r, 1, 1, self.cache)
        bad = 0
        for graph in graphs:
            fiber = Fraction(1)
            for l in geometry.bundle.convex_degrees:
                fiber *= l * lam[graph.labels[graph.mark]]
            kernel = graph_contribution(graph, weights, geometry, None, None, METHOD.TWIST_KERNEL)
            full = graph_contribution(graph, weights, geometry, None, None, METHOD.TWIST_FULL)
            if kernel * fiber != full:
                bad += 1
        return bad == 0, f'{len(graphs) - bad} of {len(graphs)} one-marked graphs satisfy it'


def _run_check(report: SelftestReport, name: str, check: Callable[[], Tuple[bool, str]]) -> None:
    try:
        passed, detail = check()
    except (GWError, ValueError, ZeroDivisionError) as exc:
        passed, detail = False, f'{type(exc).__name__}: {exc}'
    level = GW_LOGGER.info if passed else GW_LOGGER.error
    level(f'Selftest {name}: {"pass" if passed else "FAIL"} ({detail})')
    report.append(CheckResult(name, passed, detail))


def run_selftest(
    seed: int = INTERNAL.DEFAULT_WEIGHT_SEED,
    processes: int = 1,
    cache_dir: Optional[str] = None,
) -> SelftestReport:
    """
    Run the cross-oracle suite: Schubert calculus, localization and the mirror
    pipeline against one another, plus the weight, descendant and cache checks.
    A failing check is recorded, never raised.

    :param seed: seed of the torus weight sequence
    :param processes: worker processes for the localization sums
    :param cache_dir: graph cache to validate and then use, if any
    """
    suite = _Suite(seed, processes, GraphCache(cache_dir) if cache_dir else None)
    report = SelftestReport()

    # validated before the other checks regenerate anything
    _run_check(report, 'graph cache', suite.cache_validation)
    for name, expected in LINE_COUNTS:
        _run_check(report, f'line count {name}', lambda n=name, e=expected: suite.schubert_lines(n, e))
    _run_check(report, 'quintic localization vs mirror', suite.quintic_pipelines)
    _run_check(report, 'weight independence', suite.weight_independence)
    _run_check(report, 'local P1 multiple covers', suite.local_p1)
    _run_check(report, 'P1 descendants', suite.p1_descendants)
    _run_check(report, 'J closed form P1', lambda: suite.j_closed_form('p1', 2))
    _run_check(report, 'J closed form P2', lambda: suite.j_closed_form('p2', 2))
    _run_check(report, 'quintic kernel twist', suite.quintic_kernel)
    _run_check(report, 'divisor axiom', suite.divisor_axiom)
    _run_check(report, 'evaluation kernel identity', suite.kernel_identity)

    GW_LOGGER.info(f'Selftest finished: {len(report) - len(report.failures)} of {len(report)} passed')
    return report
