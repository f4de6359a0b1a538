from fractions import Fraction
from typing import Optional

from sympy.polys.ring_series import (
    rs_exp,
    rs_log,
    rs_mul,
    rs_series_inversion,
    rs_series_reversion,
    rs_subs,
    rs_trunc,
)

from gw_zero.exceptions import SeriesDomainError, SeriesPrecisionError
from gw_zero.series.TruncatedSeries import RATIONAL_DOMAIN, TruncatedSeries
from gw_zero.series.ring import MIRROR_AXIS, Q, SERIES_RING, monomial, q


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at min(a.order, b.order); both series must share a ring"""
    if a.domain != b.domain:
        raise SeriesDomainError(f'Series over {a.domain} and {b.domain} do not mix')
    return a * b


def _unit_inverse(value):
    if isinstance(value, Fraction):
        if value == 0:
            raise SeriesDomainError('Constant term 0 is not invertible')
        return 1 / value
    if not value.is_unit():
        raise SeriesDomainError(f'Constant term {value} is not a unit')
    return value.inverse()


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    """
    Multiplicative inverse of a series whose constant term is a unit.

    The constant term is divided out first so the q-free part is exactly 1, which
    is what Newton inversion in q requires when coefficients carry H and 1/hbar.
    """
    b0 = _unit_inverse(a[0])
    monic = a * b0
    inverse = rs_series_inversion(monic.poly, q, a.order + 1)
    return TruncatedSeries.from_poly(inverse, a.order, a.zero) * b0


def series_exp_log(a: TruncatedSeries, mode: str) -> TruncatedSeries:
    """
    Formal exponential (`mode='exp'`, constant term 0) or logarithm
    (`mode='log'`, constant term 1), truncated at a.order.
    """
    if mode == 'exp':
        if a[0] != 0:
            raise SeriesDomainError(f'exp needs a zero constant term, got {a[0]}')
        if not a.poly:
            return TruncatedSeries.one(a.order, a.zero)
        return TruncatedSeries.from_poly(rs_exp(a.poly, q, a.order + 1), a.order, a.zero)

    if mode == 'log':
        if a[0] != 1:
            raise SeriesDomainError(f'log needs constant term 1, got {a[0]}')
        return TruncatedSeries.from_poly(rs_log(a.poly, q, a.order + 1), a.order, a.zero)

    raise ValueError(f'Unknown series_exp_log mode: {mode!r}')


def series_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    f(g(Q)) for a rational inner series g with zero constant term.
    The outer series may have coefficients in any supported ring.
    """
    if g.domain != RATIONAL_DOMAIN:
        raise SeriesDomainError('The inner series of a composition must be rational')
    if g[0] != 0:
        raise SeriesDomainError('The inner series of a composition needs a zero constant term')
    order = min(f.order, g.order)
    composed = rs_subs(f.poly, {q: g.poly}, q, order + 1)
    return TruncatedSeries.from_poly(composed, order, f.zero)


def exp_reversion(g: TruncatedSeries, order: Optional[int] = None) -> TruncatedSeries:
    """
    Inverts the change of variables t = log q + g(q).

    Returns q as a series in Q = e^t by reverting Q = q * exp(g(q)). Computing q
    through order n needs g through order n - 1.
    """
    if g.domain != RATIONAL_DOMAIN:
        raise SeriesDomainError('exp_reversion expects a rational series')
    if g[0] != 0:
        raise SeriesDomainError(f'exp_reversion needs g(0) = 0, got {g[0]}')
    if order is None:
        order = g.order
    if order > g.order + 1:
        raise SeriesPrecisionError(
            f'A reversion to order {order} needs g through q^{order - 1}, '
            f'but g is truncated at q^{g.order}'
        )
    if order == 0:
        return TruncatedSeries([0], 0)

    inner = rs_trunc(g.poly, q, order)
    exponential = rs_exp(inner, q, order) if inner else SERIES_RING.one
    Q_of_q = rs_mul(q, exponential, q, order + 1)
    q_of_Q = rs_series_reversion(Q_of_q, q, order + 1, Q)
    # rename the reverted variable back to q
    renamed = SERIES_RING({monomial(q_power=m[MIRROR_AXIS]): c for m, c in q_of_Q.items()})
    return TruncatedSeries.from_poly(renamed, order)
