from typing import Optional

from gw_zero import GW_LOGGER
from gw_zero.GeometryConfig import GeometryConfig
from gw_zero.constants import INTERNAL, METHOD
from gw_zero.localization.cache import GraphCache
from gw_zero.localization.integrals import one_point_correlator, twisted_rank
from gw_zero.mirror.JSeries import BRACKET, JSeries
from gw_zero.series.HbarLaurent import HbarLaurent
from gw_zero.series.TruncatedSeries import TruncatedSeries


def assemble_j_from_correlators(
    cfg: GeometryConfig,
    D: int,
    twist: str = METHOD.TWIST_NONE,
    seed: int = INTERNAL.DEFAULT_WEIGHT_SEED,
    processes: int = 1,
    cache: Optional[GraphCache] = None,
) -> JSeries:
    """
    The bracket 1 + sum_{d>=1} q^d sum_{n,a} hbar^-(n+2) <tau_n H^a>_d H^(r-a),
    with each correlator computed by localization. H^(r-a) is the dual of H^a under
    the intersection pairing. With twist='kernel' the correlators carry the Euler class
    of the kernel of evaluation at the marked point; multiply the result by the
    bundle's Euler class to compare against the twisted J-series.
    """
    if twist not in (METHOD.TWIST_NONE, METHOD.TWIST_KERNEL):
        raise ValueError(f'Correlator brackets support twist none or kernel, got {twist!r}')
    if D < 0:
        raise ValueError(f'D must be nonnegative, got {D}')
    r = cfg.r
    terms = [HbarLaurent.one(r)]
    for d in range(1, D + 1):
        coefficient = HbarLaurent.zero(r)
        for a in range(r + 1):
            # the dimension axiom leaves a single psi power per insertion
            n = cfg.vdim(d, marks=1) - a - twisted_rank(cfg, d, twist)
            if n < 0:
                continue
            value = one_point_correlator(cfg, d, n, a, twist, seed, processes, cache)
            if value:
                coefficient = coefficient + HbarLaurent.monomial(r, r - a, -(n + 2), value)
        terms.append(coefficient)
        GW_LOGGER.info(f'Assembled q^{d} bracket for {cfg} (twist={twist})')
    return JSeries(TruncatedSeries(terms, D, HbarLaurent.zero(r)), BRACKET)
