from gw_zero import GW_LOGGER
from gw_zero.cohomology.ProjClass import ProjClass
from gw_zero.mirror.JSeries import RAW_I, JSeries, MirrorConfig
from gw_zero.series.HbarLaurent import HbarLaurent
from gw_zero.series.TruncatedSeries import TruncatedSeries


def hypergeometric_term(cfg: MirrorConfig, d: int) -> HbarLaurent:
    """
    The q^d coefficient

        prod_i prod_{k=1..l_i d} (l_i H + k hbar) * prod_j prod_{k=0..m_j d-1} (-m_j H - k hbar)
        / prod_{k=1..d} (H + k hbar)^(r+1)

    Each factor is hbar times a polynomial in x = H/hbar, so the term is
    hbar^(-index*d) times a class in Q[x]/(x^(r+1)).
    """
    geometry = cfg.geometry
    r = geometry.r
    poly = ProjClass.one(r)
    for l in geometry.bundle.convex_degrees:
        for k in range(1, l * d + 1):
            poly = poly * ProjClass(r, [k, l])
    for m in geometry.bundle.concave_degrees:
        for k in range(m * d):
            poly = poly * ProjClass(r, [-k, -m])
    denominator = ProjClass.one(r)
    for k in range(1, d + 1):
        denominator = denominator * ProjClass(r, [k, 1]) ** (r + 1)
    poly = poly * denominator.inverse()
    return HbarLaurent.from_hbar_polynomial(poly, -geometry.index * d, cfg.hbar_window)


def i_function(cfg: MirrorConfig) -> JSeries:
    """
    The hypergeometric I-series of the configuration through q^D.

    :raises SeriesPrecisionError: when cfg.hbar_window cannot hold a required term
    """
    terms = [hypergeometric_term(cfg, d) for d in range(cfg.q_order + 1)]
    GW_LOGGER.debug(f'Built I-series through q^{cfg.q_order} for {cfg.geometry}')
    zero = HbarLaurent.zero(cfg.r, cfg.hbar_window)
    return JSeries(TruncatedSeries(terms, cfg.q_order, zero), RAW_I)
