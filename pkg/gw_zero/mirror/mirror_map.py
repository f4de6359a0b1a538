from typing import Tuple

from gw_zero import GW_LOGGER
from gw_zero.cohomology.ProjClass import ProjClass
from gw_zero.exceptions import MirrorError
from gw_zero.mirror.JSeries import NORMALIZED_J, RAW_I, JSeries
from gw_zero.series.HbarLaurent import HbarLaurent
from gw_zero.series.TruncatedSeries import TruncatedSeries
from gw_zero.series.functions import exp_reversion, series_compose, series_exp_log, series_invert


def mirror_map(I: JSeries) -> Tuple[TruncatedSeries, JSeries]:
    """
    Apply the mirror transformation to a raw I-series.

    With I0 the H^0 hbar^0 part and I1 the H hbar^-1 part, the flat coordinate is
    t = log q + g(q), g = I1/I0. When the I-series also carries an H^0 hbar^-1 term P
    (index-one Fano configurations) it is removed by the same exponential prefactor:

        J(Q) = exp(-(g H + P) / hbar) * I / I0,  re-expanded in Q = e^t

    :param I: the raw I-series
    :return: (g, J). g is the series g(q) = I1/I0, not the flat coordinate itself:
        the mirror map is t(q) = log q + g(q), and the `log q` term is left implicit.
        J is the normalized J-series expanded in Q = e^t.
    """
    if I.kind != RAW_I:
        raise MirrorError(f'mirror_map expects a raw I-series, got {I.kind}')
    r = I.r
    order = I.order

    I0 = I.component(0, 0)
    if I0[0] == 0:
        raise MirrorError('The H^0 hbar^0 part of the I-series is not a unit')
    normalized = I.series * series_invert(I0)

    g = I.component(1, -1) * series_invert(I0)
    p = JSeries(normalized).component(0, -1)
    if g[0] != 0 or p[0] != 0:
        raise MirrorError('The degree-0 term of the I-series carries hbar^-1 terms')

    window = I.series.zero.window
    hyperplane = ProjClass.hyperplane(r, 1)
    exponent = TruncatedSeries(
        [
            HbarLaurent(r, {-1: -(p[d] + g[d] * hyperplane)}, window)
            for d in range(order + 1)
        ],
        order,
        HbarLaurent.zero(r, window),
    )
    shifted = series_exp_log(exponent, 'exp') * normalized

    q_of_Q = exp_reversion(g, order)
    J = JSeries(series_compose(shifted, q_of_Q), NORMALIZED_J)
    GW_LOGGER.debug(f'Mirror map g = {g}, hbar^-1 correction = {p}')
    return g, J
