import argparse
import logging
import sys
from typing import List, Optional

from gw_zero import GW_LOGGER
from gw_zero.GeometryConfig import GeometryConfig
from gw_zero.RunOptions import RunOptions
from gw_zero.constants import GEOMETRY, INTERNAL, METHOD
from gw_zero.exceptions import (
    DimensionMismatchError,
    GWError,
    MirrorError,
    PipelineDisagreementError,
)
from gw_zero.export import cache_entries_to_jsonlite, cache_entries_to_table
from gw_zero.run import clear_cache, inspect_cache, run_compute, run_selftest

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

# argparse dests that are also RunOptions keys
_OPTION_FLAGS = (
    'r',
    'convex',
    'concave',
    'max_degree',
    'method',
    'char_class',
    'chern_parameter',
    'output_format',
    'cache_dir',
    'seed',
    'processes',
)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--cache-dir', dest='cache_dir', help='Graph cache directory.')
    parser.add_argument('--seed', type=int, help='Seed of the torus weight sequence.')
    parser.add_argument('--processes', type=int, help='Worker processes for graph sums.')
    parser.add_argument(
        '--format',
        dest='output_format',
        choices=[METHOD.TABLE, METHOD.JSON],
        help='Human table or structured JSON records.',
    )
    parser.add_argument('-v', '--verbose', action='count', default=0, help='More logging (repeatable).')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='gw-zero',
        description='Exact genus-zero Gromov-Witten invariants of zero loci in projective space.',
    )
    commands = parser.add_subparsers(dest='command', required=True)

    compute = commands.add_parser('compute', help='Compute N_d, K_d and instanton numbers.')
    compute.add_argument('--config', help='JSON file of run options; flags override it.')
    compute.add_argument('--geometry', choices=sorted(GEOMETRY.GEOMETRIES), help='A named geometry.')
    compute.add_argument('--r', type=int, help='Ambient dimension of P^r.')
    compute.add_argument('--convex', type=int, action='append', help='Degree l of an O(l) summand (repeatable).')
    compute.add_argument('--concave', type=int, action='append', help='Degree m of an O(-m) summand (repeatable).')
    compute.add_argument('--max-degree', dest='max_degree', type=int, help='Highest degree D.')
    compute.add_argument('--method', choices=[METHOD.LOCALIZATION, METHOD.MIRROR, METHOD.BOTH])
    compute.add_argument('--class', dest='char_class', choices=[METHOD.EULER, METHOD.CHERN_POLYNOMIAL])
    compute.add_argument('--chern-parameter', dest='chern_parameter', help='The s of c_s(V), as "p/q".')
    _add_common(compute)

    selftest = commands.add_parser('selftest', help='Run the cross-oracle checks.')
    _add_common(selftest)

    cache = commands.add_parser('cache', help='Inspect or clear the graph cache.')
    cache.add_argument('action', choices=['inspect', 'clear'])
    _add_common(cache)
    return parser


def options_from_args(args: argparse.Namespace) -> RunOptions:
    """Config file first, then the named geometry, then explicit flags"""
    opts = RunOptions.from_file(args.config) if getattr(args, 'config', None) else RunOptions()
    overrides = {}
    if getattr(args, 'geometry', None):
        overrides.update(GeometryConfig.named(args.geometry).to_dict())
    for key in _OPTION_FLAGS:
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    opts.merge_args(**overrides)
    return opts


def _configure_logging(verbosity: int) -> None:
    if verbosity:
        level = logging.INFO if verbosity == 1 else logging.DEBUG
        logging.basicConfig(level=level, format='%(asctime)s %(name)s %(levelname)s %(message)s')


def _emit(output_format: str, table: str, jsonlite) -> None:
    if output_format == METHOD.JSON:
        print(''.join(jsonlite))
    else:
        print(table)


def _compute(args: argparse.Namespace) -> int:
    opts = options_from_args(args)
    results = run_compute(opts)
    _emit(opts.output_format, results.table(), results.jsonlite())
    return EXIT_OK


def _selftest(args: argparse.Namespace) -> int:
    opts = options_from_args(args)
    report = run_selftest(opts.seed, opts.processes, opts.resolved_cache_dir())
    _emit(opts.output_format, report.table(), report.jsonlite())
    return EXIT_OK if report.passed else EXIT_FAILED


def _cache(args: argparse.Namespace) -> int:
    opts = options_from_args(args)
    directory = opts.resolved_cache_dir()
    if directory is None:
        raise ValueError(f'No cache directory: pass --cache-dir or set {INTERNAL.GRAPH_CACHE_ENV}')
    if args.action == 'clear':
        print(f'removed {clear_cache(directory)} graph cache files from {directory}')
    else:
        entries = inspect_cache(directory)
        _emit(opts.output_format, cache_entries_to_table(entries), cache_entries_to_jsonlite(entries))
    return EXIT_OK


_COMMANDS = {'compute': _compute, 'selftest': _selftest, 'cache': _cache}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return _COMMANDS[args.command](args)
    except PipelineDisagreementError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, KeyError, OSError, DimensionMismatchError, MirrorError) as exc:
        print(f'error: invalid configuration: {exc}', file=sys.stderr)
        return EXIT_INVALID
    except GWError as exc:
        GW_LOGGER.exception(exc)
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_FAILED
