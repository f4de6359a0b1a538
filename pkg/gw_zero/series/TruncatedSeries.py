from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Tuple

from sympy.polys.rings import PolyElement
from sympy.polys.ring_series import rs_mul, rs_pow, rs_trunc

from gw_zero.cohomology.ProjClass import ProjClass
from gw_zero.exceptions import SeriesDomainError, SeriesPrecisionError
from gw_zero.series.HbarLaurent import HbarLaurent, reduce_hbar
from gw_zero.series.ring import SERIES_RING, monomial, q, q_slice, to_fraction, to_qq

RATIONAL_DOMAIN = ('Q',)
# coefficient rings in promotion order: Q inside H*(P^r) inside H*(P^r)[1/hbar]
_DOMAIN_RANK = {'Q': 0, 'H': 1, 'hbar': 2}


def coefficient_domain(value) -> Tuple:
    """The ring a coefficient lives in: ('Q',), ('H', r) or ('hbar', r)"""
    if isinstance(value, Rational):
        return RATIONAL_DOMAIN
    domain = getattr(value, 'domain', None)
    if domain is None:
        raise SeriesDomainError(f'Unsupported series coefficient type: {type(value).__name__}')
    return domain


def one_like(zero):
    """The multiplicative identity of the ring `zero` belongs to"""
    if isinstance(zero, Rational):
        return Fraction(1)
    if isinstance(zero, HbarLaurent):
        return HbarLaurent.one(zero.r, zero.window)
    return ProjClass.one(zero.r)


def _poly_of(value) -> PolyElement:
    if isinstance(value, Rational):
        return SERIES_RING(to_qq(value))
    return value.poly


def _wrap(poly: PolyElement, zero):
    """A q-free polynomial as an element of the coefficient ring of `zero`"""
    if isinstance(zero, Rational):
        return to_fraction(poly.get(monomial(), 0))
    if isinstance(zero, HbarLaurent):
        return HbarLaurent.from_poly(zero.r, poly, zero.window)
    return ProjClass.from_poly(zero.r, poly)


def _common_zero(a, b):
    """The zero of the larger coefficient ring of `a` and `b`, which must be comparable"""
    domain_a, domain_b = coefficient_domain(a), coefficient_domain(b)
    if len(domain_a) > 1 and len(domain_b) > 1 and domain_a[1] != domain_b[1]:
        raise SeriesDomainError(f'Coefficients over {domain_a} and {domain_b} do not mix')
    if isinstance(a, HbarLaurent) and isinstance(b, HbarLaurent):
        return HbarLaurent.zero(a.r, a._window_with(b))
    return a if _DOMAIN_RANK[domain_a[0]] >= _DOMAIN_RANK[domain_b[0]] else b * 0


class TruncatedSeries:
    """
    A power series sum_{n<=order} c_n q^n over an exact coefficient ring, held as one
    sympy polynomial in q, H and 1/hbar.

    The coefficient ring is fixed by `zero`: a Fraction for rational series, or the
    zero of ProjClass / HbarLaurent. The polynomial is kept reduced modulo q^(order+1),
    H^(r+1) and the hbar window, so every operation is ring arithmetic in that quotient.
    Binary operations truncate to the smaller of the two orders.
    """

    __slots__ = ('order', 'poly', 'zero')

    def __init__(self, coeffs: Iterable = (), order: Optional[int] = None, zero=None):
        values = list(coeffs)
        if zero is None:
            zero = Fraction(0) if not values else values[0] * 0
        if isinstance(zero, Rational):
            zero = Fraction(0)
        if order is None:
            order = max(len(values) - 1, 0)
        if order < 0:
            raise SeriesPrecisionError(f'Truncation order must be nonnegative, got {order}')

        domain = coefficient_domain(zero)
        poly = SERIES_RING.zero
        for n, c in enumerate(values[: order + 1]):
            if coefficient_domain(c) != domain:
                raise SeriesDomainError(
                    f'Coefficient in {coefficient_domain(c)} does not belong to {domain}'
                )
            if c:
                poly += _poly_of(c) * q**n
        object.__setattr__(self, 'order', order)
        object.__setattr__(self, 'zero', zero)
        object.__setattr__(self, 'poly', self._reduce(poly, order, zero))

    def __setattr__(self, key, value):
        raise AttributeError('TruncatedSeries is immutable')

    def __reduce__(self):
        return (TruncatedSeries, (self.coeffs, self.order, self.zero))

    @staticmethod
    def _reduce(poly: PolyElement, order: int, zero) -> PolyElement:
        poly = rs_trunc(poly, q, order + 1)
        if isinstance(zero, (ProjClass, HbarLaurent)):
            poly = reduce_hbar(poly, zero.r, getattr(zero, 'window', None))
        return poly

    @classmethod
    def from_poly(cls, poly: PolyElement, order: int, zero=None) -> 'TruncatedSeries':
        """Wrap a polynomial in q (and H, 1/hbar for class-valued series)"""
        zero = Fraction(0) if zero is None else zero
        value = object.__new__(cls)
        object.__setattr__(value, 'order', order)
        object.__setattr__(value, 'zero', zero)
        object.__setattr__(value, 'poly', cls._reduce(poly, order, zero))
        return value

    @classmethod
    def constant(cls, value, order: int, zero=None) -> 'TruncatedSeries':
        return cls([value], order, zero)

    @classmethod
    def one(cls, order: int, zero=None) -> 'TruncatedSeries':
        zero = Fraction(0) if zero is None else zero
        return cls([one_like(zero)], order, zero)

    @classmethod
    def variable(cls, order: int) -> 'TruncatedSeries':
        """The rational series q"""
        return cls([0, 1], order)

    @property
    def domain(self) -> Tuple:
        return coefficient_domain(self.zero)

    @property
    def coeffs(self) -> Tuple:
        return tuple(self[n] for n in range(self.order + 1))

    def __getitem__(self, n: int):
        if n > self.order:
            raise SeriesPrecisionError(f'q^{n} lies above the truncation order {self.order}')
        if n < 0:
            return self.zero
        return _wrap(q_slice(self.poly, n), self.zero)

    def truncate(self, order: int) -> 'TruncatedSeries':
        if order > self.order:
            raise SeriesPrecisionError(f'Cannot raise truncation order {self.order} to {order}')
        return TruncatedSeries.from_poly(self.poly, order, self.zero)

    def _check(self, other: 'TruncatedSeries'):
        if self.domain != other.domain:
            raise SeriesDomainError(f'Series over {self.domain} and {other.domain} do not mix')

    def _window_zero(self, other: 'TruncatedSeries'):
        if isinstance(self.zero, HbarLaurent):
            return HbarLaurent.zero(self.zero.r, self.zero._window_with(other.zero))
        return self.zero

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.zero + other, self.order, self.zero)
        self._check(other)
        order = min(self.order, other.order)
        return TruncatedSeries.from_poly(self.poly + other.poly, order, self._window_zero(other))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries.from_poly(-self.poly, self.order, self.zero)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.zero + other, self.order, self.zero)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            zero = _common_zero(self.zero, other)
            return TruncatedSeries.from_poly(self.poly * _poly_of(other), self.order, zero)
        order = min(self.order, other.order)
        # rational series scale a coefficient-valued one
        if self.domain == RATIONAL_DOMAIN and other.domain != RATIONAL_DOMAIN:
            zero = other.zero
        elif other.domain == RATIONAL_DOMAIN and self.domain != RATIONAL_DOMAIN:
            zero = self.zero
        else:
            self._check(other)
            zero = self._window_zero(other)
        return TruncatedSeries.from_poly(rs_mul(self.poly, other.poly, q, order + 1), order, zero)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            from gw_zero.series.functions import series_invert

            return self * series_invert(other)
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, n: int) -> 'TruncatedSeries':
        if n < 0:
            from gw_zero.series.functions import series_invert

            return series_invert(self) ** (-n)
        if n == 0:
            return TruncatedSeries.one(self.order, self.zero)
        return TruncatedSeries.from_poly(
            rs_pow(self.poly, n, q, self.order + 1), self.order, self.zero
        )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.domain == other.domain and self.poly == other.poly

    def __hash__(self):
        return hash((self.order, self.domain, tuple(sorted(self.poly.items()))))

    def __repr__(self):
        return f'TruncatedSeries({list(self.coeffs)!r}, order={self.order})'

    def __str__(self):
        terms = [f'({c})*q^{n}' for n, c in enumerate(self.coeffs) if c]
        body = ' + '.join(terms) if terms else '0'
        return f'{body} + O(q^{self.order + 1})'
