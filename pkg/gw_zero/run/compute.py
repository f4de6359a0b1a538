import time
from fractions import Fraction
from typing import Dict, Optional

from gw_zero import GW_LOGGER
from gw_zero.GWResults import DegreeRecord, GWResults
from gw_zero.RunOptions import RunOptions
from gw_zero.constants import METHOD
from gw_zero.exceptions import PipelineDisagreementError
from gw_zero.instanton import InvariantTable, invert_multicover
from gw_zero.localization import GraphCache, euler_integral
from gw_zero.mirror import MirrorConfig, extract_gw, i_function, mirror_map


def graph_cache(opts: RunOptions) -> Optional[GraphCache]:
    directory = opts.resolved_cache_dir()
    return GraphCache(directory) if directory else None


def _mirror_invariants(opts: RunOptions) -> Dict[int, Fraction]:
    cfg = MirrorConfig(opts.geometry(), opts.max_degree)
    _, J = mirror_map(i_function(cfg))
    return dict(enumerate(extract_gw(J, cfg), start=1))


def _localization_values(opts: RunOptions) -> Dict[int, Fraction]:
    geometry = opts.geometry()
    cache = graph_cache(opts)
    b = opts.char_class_spec()
    return {
        d: euler_integral(geometry, d, b, opts.seed, opts.processes, cache)
        for d in range(1, opts.max_degree + 1)
    }


def run_compute(opts: RunOptions) -> GWResults:
    """
    Run the pipelines selected by `opts` and collect one record per degree.

    Localization yields K_d; for a nonempty convex bundle under the Euler class K_d is
    the zero-locus invariant N_d. The mirror pipeline yields N_d directly. With
    method=both the two N_d must agree exactly.

    :raises ValueError: on an invalid configuration
    :raises PipelineDisagreementError: when both pipelines ran and disagree
    """
    opts.check()
    geometry = opts.geometry()
    start = time.perf_counter()
    GW_LOGGER.info(f'COMPUTE START: {geometry} through degree {opts.max_degree} ({opts.method})')

    results = GWResults(geometry=geometry, opts=opts)
    if opts.max_degree == 0:
        results.elapsed = time.perf_counter() - start
        return results

    euler = opts.char_class == METHOD.EULER
    localized: Dict[int, Fraction] = {}
    mirrored: Dict[int, Fraction] = {}
    if opts.method in (METHOD.LOCALIZATION, METHOD.BOTH):
        localized = _localization_values(opts)
    if opts.method in (METHOD.MIRROR, METHOD.BOTH):
        mirrored = _mirror_invariants(opts)

    has_zero_locus = euler and geometry.bundle.is_convex and not geometry.bundle.is_empty
    invariants: Dict[int, Fraction] = {}
    provenance: Dict[int, str] = {}
    disagreements = []
    for d in range(1, opts.max_degree + 1):
        local_n = localized.get(d) if has_zero_locus else None
        mirror_n = mirrored.get(d)
        if local_n is not None and mirror_n is not None:
            if local_n != mirror_n:
                disagreements.append({'degree': d, METHOD.LOCALIZATION: local_n, METHOD.MIRROR: mirror_n})
            invariants[d] = mirror_n
            provenance[d] = METHOD.BOTH
        elif mirror_n is not None:
            invariants[d] = mirror_n
            provenance[d] = METHOD.MIRROR
        elif local_n is not None:
            invariants[d] = local_n
            provenance[d] = METHOD.LOCALIZATION
        else:
            provenance[d] = METHOD.LOCALIZATION

    if opts.method == METHOD.BOTH:
        results.pipelinesAgree = not disagreements
    if disagreements:
        rows = '\n'.join(
            f'  d={row["degree"]}: localization {row[METHOD.LOCALIZATION]} '
            f'vs mirror {row[METHOD.MIRROR]}'
            for row in disagreements
        )
        msg = f'Pipelines disagree for {geometry}:\n{rows}'
        GW_LOGGER.error(msg)
        raise PipelineDisagreementError(msg, disagreements)

    # instanton numbers from N_d when present, else from Euler-class K_d
    source = invariants if invariants else (localized if euler else {})
    instantons = None
    if source:
        table = InvariantTable(source, str(geometry), provenance.get(1, METHOD.LOCALIZATION))
        instantons = invert_multicover(table)

    for d in range(1, opts.max_degree + 1):
        results.append(
            DegreeRecord(
                degree=d,
                N=invariants.get(d),
                K=localized.get(d),
                n=instantons[d] if instantons is not None else None,
                integral=instantons.integrality_report[d] if instantons is not None else None,
                provenance=provenance[d],
            )
        )

    results.elapsed = time.perf_counter() - start
    GW_LOGGER.info(f'COMPUTE COMPLETE: {geometry} in {results.elapsed:.2f} s')
    return results
