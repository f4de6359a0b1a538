from fractions import Fraction
from numbers import Rational
from typing import Iterable, Tuple, Union

from sympy.polys.rings import PolyElement
from sympy.polys.ring_series import rs_mul, rs_pow, rs_series_inversion, rs_trunc

from gw_zero.exceptions import SeriesDomainError
from gw_zero.series.ring import H, H_AXIS, SERIES_RING, monomial, only_axes, to_fraction, to_qq

Scalar = Union[int, Fraction]


class ProjClass:
    """
    An element of H*(P^r; Q) = Q[H]/(H^{r+1}), held as a sympy polynomial in H.

    Products truncate above H^r, so the class also serves as the ring
    Q[x]/(x^{r+1}) wherever a nilpotent polynomial variable is needed.
    Instances are immutable.
    """

    __slots__ = ('r', 'poly')

    def __init__(self, r: int, coeffs: Iterable[Scalar] = ()):
        if r < 0:
            raise ValueError(f'Ambient dimension must be nonnegative, got {r}')
        terms = {}
        for a, c in enumerate(coeffs):
            if a > r:
                break
            if c:
                terms[monomial(h_power=a)] = to_qq(Fraction(c))
        object.__setattr__(self, 'r', r)
        object.__setattr__(self, 'poly', SERIES_RING(terms))

    def __setattr__(self, key, value):
        raise AttributeError('ProjClass is immutable')

    @classmethod
    def from_poly(cls, r: int, poly: PolyElement) -> 'ProjClass':
        """Wrap a polynomial in H, dropping everything above H^r"""
        if not only_axes(poly, H_AXIS):
            raise SeriesDomainError(f'{poly} is not a polynomial in the hyperplane class alone')
        value = object.__new__(cls)
        object.__setattr__(value, 'r', r)
        object.__setattr__(value, 'poly', rs_trunc(poly, H, r + 1))
        return value

    @classmethod
    def zero(cls, r: int) -> 'ProjClass':
        return cls(r)

    @classmethod
    def one(cls, r: int) -> 'ProjClass':
        return cls(r, [1])

    @classmethod
    def hyperplane(cls, r: int, power: int = 1, coeff: Scalar = 1) -> 'ProjClass':
        """coeff * H^power, zero when power exceeds r"""
        if power < 0:
            raise ValueError(f'Negative power of the hyperplane class: {power}')
        return cls.from_poly(r, H**power * to_qq(Fraction(coeff)))

    @property
    def domain(self) -> Tuple[str, int]:
        return ('H', self.r)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(self[a] for a in range(self.r + 1))

    def __getitem__(self, a: int) -> Fraction:
        if 0 <= a <= self.r:
            return to_fraction(self.poly.get(monomial(h_power=a), 0))
        return Fraction(0)

    def _coerce(self, other) -> 'ProjClass':
        if isinstance(other, ProjClass):
            if other.r != self.r:
                raise SeriesDomainError(
                    f'Cohomology classes live on different spaces: P^{self.r} and P^{other.r}'
                )
            return other
        if isinstance(other, Rational):
            return ProjClass(self.r, [other])
        raise SeriesDomainError(f'Cannot combine ProjClass with {type(other).__name__}')

    def __add__(self, other):
        if not isinstance(other, (ProjClass, Rational)):
            return NotImplemented
        return ProjClass.from_poly(self.r, self.poly + self._coerce(other).poly)

    __radd__ = __add__

    def __neg__(self):
        return ProjClass.from_poly(self.r, -self.poly)

    def __sub__(self, other):
        if not isinstance(other, (ProjClass, Rational)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return ProjClass.from_poly(self.r, self.poly * to_qq(other))
        if not isinstance(other, ProjClass):
            return NotImplemented
        return cup(self, self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        return self * self._coerce(other).inverse()

    def __pow__(self, n: int) -> 'ProjClass':
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ProjClass.one(self.r)
        return ProjClass.from_poly(self.r, rs_pow(self.poly, n, H, self.r + 1))

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = ProjClass(self.r, [other])
        if not isinstance(other, ProjClass):
            return NotImplemented
        return self.r == other.r and self.poly == other.poly

    def __hash__(self):
        return hash((self.r, self.coeffs))

    def __reduce__(self):
        return (ProjClass, (self.r, self.coeffs))

    def __bool__(self):
        return bool(self.poly)

    def is_unit(self) -> bool:
        return self[0] != 0

    def inverse(self) -> 'ProjClass':
        """Inverse of a class with nonzero constant term; the rest is nilpotent"""
        if not self.is_unit():
            raise SeriesDomainError(f'{self} is not a unit in H*(P^{self.r})')
        return ProjClass.from_poly(self.r, rs_series_inversion(self.poly, H, self.r + 1))

    def integrate(self) -> Fraction:
        return integrate(self)

    def __repr__(self):
        return f'ProjClass({self.r}, {[str(c) for c in self.coeffs]})'

    def __str__(self):
        terms = []
        for a, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if a == 0:
                terms.append(f'{c}')
            elif a == 1:
                terms.append(f'{c}*H')
            else:
                terms.append(f'{c}*H^{a}')
        return ' + '.join(terms) if terms else '0'


def cup(x: ProjClass, y: ProjClass) -> ProjClass:
    """Cup product in H*(P^r), truncated above H^r"""
    if not isinstance(x, ProjClass) or not isinstance(y, ProjClass):
        raise SeriesDomainError('cup expects two ProjClass values')
    if x.r != y.r:
        raise SeriesDomainError(f'Cannot cup classes on P^{x.r} and P^{y.r}')
    return ProjClass.from_poly(x.r, rs_mul(x.poly, y.poly, H, x.r + 1))


def integrate(x: ProjClass) -> Fraction:
    """Integral over P^r: the coefficient of H^r"""
    return x[x.r]
