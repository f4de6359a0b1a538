from fractions import Fraction
from numbers import Rational
from typing import Dict, Optional, Tuple

from sympy.polys.rings import PolyElement
from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc

from gw_zero.cohomology.ProjClass import ProjClass
from gw_zero.exceptions import SeriesDomainError, SeriesPrecisionError
from gw_zero.series.ring import (
    H,
    H_AXIS,
    SERIES_RING,
    U_AXIS,
    monomial,
    only_axes,
    to_fraction,
    to_qq,
    u,
)


def reduce_hbar(poly: PolyElement, r: int, window: Optional[int]) -> PolyElement:
    """Image of `poly` in Q[H, 1/hbar]/(H^{r+1}, hbar^{window-1})"""
    poly = rs_trunc(poly, H, r + 1)
    if window is not None:
        poly = rs_trunc(poly, u, 1 - window)
    return poly


def _check_window(window: Optional[int]) -> Optional[int]:
    if window is not None and window > 0:
        raise SeriesPrecisionError(f'An hbar window must be nonpositive, got {window}')
    return window


class HbarLaurent:
    """
    A Laurent polynomial in 1/hbar with coefficients in H*(P^r), held as a sympy
    polynomial in H and u = 1/hbar, so hbar^-k is u^k and no positive power of
    hbar can occur.

    `window` is the lowest hbar exponent retained: products drop anything below it,
    which makes the values a quotient ring, and a value constructed with a term
    below the window is rejected. `window=None` keeps every exponent.
    """

    __slots__ = ('r', 'poly', 'window')

    def __init__(self, r: int, terms: Dict[int, ProjClass] = None, window: Optional[int] = None):
        window = _check_window(window)
        poly = SERIES_RING.zero
        for exponent, coeff in (terms or {}).items():
            if not isinstance(coeff, ProjClass):
                coeff = ProjClass(r, [coeff])
            if coeff.r != r:
                raise SeriesDomainError(f'Coefficient on P^{coeff.r} in a series over P^{r}')
            if not coeff:
                continue
            if exponent > 0:
                raise SeriesDomainError(f'hbar^{exponent} is not a power of 1/hbar')
            if window is not None and exponent < window:
                raise SeriesPrecisionError(
                    f'hbar^{exponent} term lies below the truncation window hbar^{window}'
                )
            poly += coeff.poly * u ** (-exponent)
        object.__setattr__(self, 'r', r)
        object.__setattr__(self, 'poly', poly)
        object.__setattr__(self, 'window', window)

    def __setattr__(self, key, value):
        raise AttributeError('HbarLaurent is immutable')

    def __reduce__(self):
        return (HbarLaurent, (self.r, self.terms, self.window))

    @classmethod
    def from_poly(cls, r: int, poly: PolyElement, window: Optional[int] = None) -> 'HbarLaurent':
        """Wrap a polynomial in H and u, reduced modulo H^{r+1} and the window"""
        if not only_axes(poly, H_AXIS, U_AXIS):
            raise SeriesDomainError(f'{poly} involves more than H and 1/hbar')
        value = object.__new__(cls)
        object.__setattr__(value, 'r', r)
        object.__setattr__(value, 'poly', reduce_hbar(poly, r, _check_window(window)))
        object.__setattr__(value, 'window', window)
        return value

    @classmethod
    def zero(cls, r: int, window: Optional[int] = None) -> 'HbarLaurent':
        return cls(r, {}, window)

    @classmethod
    def one(cls, r: int, window: Optional[int] = None) -> 'HbarLaurent':
        return cls(r, {0: ProjClass.one(r)}, window)

    @classmethod
    def monomial(
        cls, r: int, h_power: int, hbar_exponent: int, coeff=1, window: Optional[int] = None
    ) -> 'HbarLaurent':
        """coeff * H^h_power * hbar^hbar_exponent"""
        return cls(r, {hbar_exponent: ProjClass.hyperplane(r, h_power, coeff)}, window)

    @classmethod
    def from_hbar_polynomial(
        cls, poly: ProjClass, hbar_shift: int, window: Optional[int] = None
    ) -> 'HbarLaurent':
        """
        Reads `poly` as a polynomial in x = H/hbar and returns hbar^hbar_shift * poly(H/hbar),
        i.e. the coefficient of x^j lands on H^j hbar^(hbar_shift - j).
        """
        if hbar_shift > 0:
            raise SeriesDomainError(f'hbar^{hbar_shift} is not a power of 1/hbar')
        shifted = SERIES_RING(
            {
                monomial(h_power=m[H_AXIS], u_power=m[H_AXIS] - hbar_shift): c
                for m, c in poly.poly.items()
            }
        )
        if window is not None and shifted and shifted.degree(u) > -window:
            raise SeriesPrecisionError(
                f'hbar window {window} cannot hold hbar^{-shifted.degree(u)}'
            )
        return cls.from_poly(poly.r, shifted, window)

    @property
    def domain(self) -> Tuple[str, int]:
        return ('hbar', self.r)

    @property
    def terms(self) -> Dict[int, ProjClass]:
        """{hbar exponent: coefficient class}, in increasing exponent order"""
        grouped: Dict[int, Dict] = {}
        for m, c in self.poly.items():
            grouped.setdefault(-m[U_AXIS], {})[monomial(h_power=m[H_AXIS])] = c
        return {
            e: ProjClass.from_poly(self.r, SERIES_RING(grouped[e])) for e in sorted(grouped)
        }

    def coefficient(self, h_power: int, hbar_exponent: int) -> Fraction:
        """The rational coefficient of H^h_power hbar^hbar_exponent"""
        if hbar_exponent > 0:
            return Fraction(0)
        return to_fraction(self.poly.get(monomial(h_power=h_power, u_power=-hbar_exponent), 0))

    def with_window(self, window: Optional[int]) -> 'HbarLaurent':
        return HbarLaurent.from_poly(self.r, self.poly, window)

    def _window_with(self, other: 'HbarLaurent') -> Optional[int]:
        windows = [w for w in (self.window, other.window) if w is not None]
        return max(windows) if windows else None

    def _coerce(self, other) -> 'HbarLaurent':
        if isinstance(other, HbarLaurent):
            if other.r != self.r:
                raise SeriesDomainError(f'Cannot combine series over P^{self.r} and P^{other.r}')
            return other
        if isinstance(other, (ProjClass, Rational)):
            return HbarLaurent(self.r, {0: other}, self.window)
        raise SeriesDomainError(f'Cannot combine HbarLaurent with {type(other).__name__}')

    def __add__(self, other):
        if not isinstance(other, (HbarLaurent, ProjClass, Rational)):
            return NotImplemented
        other = self._coerce(other)
        return HbarLaurent.from_poly(self.r, self.poly + other.poly, self._window_with(other))

    __radd__ = __add__

    def __neg__(self):
        return HbarLaurent.from_poly(self.r, -self.poly, self.window)

    def __sub__(self, other):
        if not isinstance(other, (HbarLaurent, ProjClass, Rational)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return HbarLaurent.from_poly(self.r, self.poly * to_qq(other), self.window)
        if not isinstance(other, (HbarLaurent, ProjClass)):
            return NotImplemented
        other = self._coerce(other)
        window = self._window_with(other)
        if window is None:
            product = self.poly * other.poly
        else:
            product = rs_mul(self.poly, other.poly, u, 1 - window)
        return HbarLaurent.from_poly(self.r, product, window)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        return self * self._coerce(other).inverse()

    def is_unit(self) -> bool:
        return bool(self.poly) and self.poly.degree(u) == 0 and self.coefficient(0, 0) != 0

    def inverse(self) -> 'HbarLaurent':
        """Only hbar-constant units are inverted; anything else has an infinite inverse"""
        if not self.is_unit():
            raise SeriesDomainError(f'{self} is not an invertible hbar-constant class')
        inverse = rs_series_inversion(self.poly, H, self.r + 1)
        return HbarLaurent.from_poly(self.r, inverse, self.window)

    def __eq__(self, other):
        if isinstance(other, (ProjClass, Rational)):
            other = self._coerce(other)
        if not isinstance(other, HbarLaurent):
            return NotImplemented
        return self.r == other.r and self.poly == other.poly

    def __hash__(self):
        return hash((self.r, tuple(sorted(self.poly.items()))))

    def __bool__(self):
        return bool(self.poly)

    def __repr__(self):
        return f'HbarLaurent({self.r}, {self.terms!r}, window={self.window})'

    def __str__(self):
        if not self.poly:
            return '0'
        return ' + '.join(f'({c})*hbar^{e}' for e, c in self.terms.items())
