from fractions import Fraction
from multiprocessing import Pool
from typing import Callable, List, Optional

from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from gw_zero import GW_LOGGER
from gw_zero.GeometryConfig import GeometryConfig
from gw_zero.constants import INTERNAL, METHOD
from gw_zero.exceptions import DimensionMismatchError, WeightDegeneracyError
from gw_zero.localization.CharClassSpec import CharClassSpec
from gw_zero.localization.FixedGraph import FixedGraph
from gw_zero.localization.cache import GraphCache
from gw_zero.localization.contribution import Descendant, graph_contribution
from gw_zero.localization.graphs import enumerate_graphs
from gw_zero.localization.weights import WeightVector, draw_weights


def fixed_graphs(r: int, d: int, marks: int, cache: Optional[GraphCache] = None) -> List[FixedGraph]:
    if cache is None:
        return enumerate_graphs(r, d, marks)
    return cache.get_or_enumerate(r, d, marks)


def _sum_chunk(args) -> Fraction:
    graphs, weights, cfg, b, descendant, twist = args
    total = Fraction(0)
    for graph in graphs:
        total += graph_contribution(graph, weights, cfg, b, descendant, twist)
    return total


def sum_contributions(
    graphs: List[FixedGraph],
    weights: WeightVector,
    cfg: GeometryConfig,
    b: Optional[CharClassSpec] = None,
    descendant: Optional[Descendant] = None,
    twist: str = METHOD.TWIST_FULL,
    processes: int = 1,
) -> Fraction:
    """
    Sum graph contributions at one weight vector.

    :param processes: number of worker processes; 1 sums serially. Exact addition
        makes the result independent of how the graphs are split.
    """
    if processes <= 1 or len(graphs) <= 1:
        return _sum_chunk((graphs, weights, cfg, b, descendant, twist))

    size = INTERNAL.POOL_CHUNK_SIZE
    chunk_count = max(processes, -(-len(graphs) // size))
    step = -(-len(graphs) // chunk_count)
    args = [
        (graphs[i : i + step], weights, cfg, b, descendant, twist)
        for i in range(0, len(graphs), step)
    ]
    GW_LOGGER.info(f'Using {processes} processes for {len(graphs)} graphs in {len(args)} chunks')
    pool = Pool(processes=processes)
    try:
        partials = pool.map(_sum_chunk, args)
    finally:
        pool.close()
        pool.join()
    return sum(partials, Fraction(0))


def _log_weight_retry(retry_state) -> None:
    GW_LOGGER.warning(
        f'Degenerate torus weights on attempt {retry_state.attempt_number}: '
        f'{retry_state.outcome.exception()}; drawing a new weight vector'
    )


def with_generic_weights(r: int, seed: int, evaluate: Callable[[WeightVector], Fraction]) -> Fraction:
    """
    Run `evaluate` on the seeded weight sequence, moving to the next vector whenever
    a zero denominator turns up, for at most INTERNAL.WEIGHT_RETRIES vectors.
    """
    for attempt in Retrying(
        reraise=True,
        retry=retry_if_exception_type(WeightDegeneracyError),
        stop=stop_after_attempt(INTERNAL.WEIGHT_RETRIES),
        before_sleep=_log_weight_retry,
    ):
        with attempt:
            weights = draw_weights(r, seed, attempt.retry_state.attempt_number - 1)
            result = evaluate(weights)
    return result


def euler_integral(
    cfg: GeometryConfig,
    d: int,
    b: Optional[CharClassSpec] = None,
    seed: int = INTERNAL.DEFAULT_WEIGHT_SEED,
    processes: int = 1,
    cache: Optional[GraphCache] = None,
    weights: Optional[WeightVector] = None,
) -> Fraction:
    """
    K_d: the integral of b(V_d) over the moduli of degree-d genus-0 stable maps to P^r.

    :param cfg: ambient space and bundle
    :param d: the degree, at least 1
    :param b: Euler class (default) or Chern polynomial
    :param seed: seed of the torus weight sequence
    :param processes: worker processes for the graph sum
    :param cache: optional graph cache
    :param weights: evaluate at these weights only, without retries

    :return: the exact value, independent of the weights
    """
    b = b if b is not None else CharClassSpec.euler()
    if d < 1:
        raise ValueError(f'Degree must be at least 1, got {d}')
    if b.is_euler and cfg.euler_rank(d) != cfg.vdim(d):
        raise DimensionMismatchError(
            f'Bundle rank {cfg.euler_rank(d)} over degree-{d} maps does not match the virtual '
            f'dimension {cfg.vdim(d)} of the moduli space for {cfg}'
        )

    graphs = fixed_graphs(cfg.r, d, 0, cache)

    def evaluate(w: WeightVector) -> Fraction:
        return sum_contributions(graphs, w, cfg, b, None, METHOD.TWIST_FULL, processes)

    value = evaluate(weights) if weights is not None else with_generic_weights(cfg.r, seed, evaluate)
    GW_LOGGER.info(f'Localization K_{d} for {cfg} with {b!r}: {value}')
    return value


def twisted_rank(cfg: GeometryConfig, d: int, twist: str) -> int:
    if twist == METHOD.TWIST_NONE:
        return 0
    rank = cfg.euler_rank(d)
    if twist == METHOD.TWIST_KERNEL:
        rank -= len(cfg.bundle.convex_degrees)
    return rank


def one_point_correlator(
    cfg: GeometryConfig,
    d: int,
    n: int,
    a: int,
    twist: str = METHOD.TWIST_NONE,
    seed: int = INTERNAL.DEFAULT_WEIGHT_SEED,
    processes: int = 1,
    cache: Optional[GraphCache] = None,
    weights: Optional[WeightVector] = None,
) -> Fraction:
    """
    <tau_n H^a>_{0,d}, optionally twisted by the Euler class of the whole bundle ('full')
    or of the kernel of evaluation at the marked point ('kernel').
    Returns 0 when the integrand degree misses the virtual dimension.
    """
    if n < 0 or a < 0:
        raise ValueError(f'Descendant powers must be nonnegative, got n={n}, a={a}')
    if d < 1:
        raise ValueError(f'Degree must be at least 1, got {d}')
    if twist not in (METHOD.TWIST_NONE, METHOD.TWIST_FULL, METHOD.TWIST_KERNEL):
        raise ValueError(f'Unknown twist {twist!r}')

    if a > cfg.r or n + a + twisted_rank(cfg, d, twist) != cfg.vdim(d, marks=1):
        return Fraction(0)

    graphs = fixed_graphs(cfg.r, d, 1, cache)
    b = CharClassSpec.euler()

    def evaluate(w: WeightVector) -> Fraction:
        return sum_contributions(graphs, w, cfg, b, (n, a), twist, processes)

    if weights is not None:
        return evaluate(weights)
    return with_generic_weights(cfg.r, seed, evaluate)
