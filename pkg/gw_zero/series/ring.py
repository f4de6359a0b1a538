from fractions import Fraction
from typing import Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

# q: Novikov variable, Q: the mirror coordinate e^t, H: hyperplane class, u: 1/hbar.
# Every series, class and Laurent coefficient is an element of this one ring.
SERIES_RING, q, Q, H, u = ring('q, Q, H, u', QQ)
Q_AXIS, MIRROR_AXIS, H_AXIS, U_AXIS = range(4)

Monomial = Tuple[int, int, int, int]


def to_qq(value):
    """Exact rational (int, Fraction or ground element) into the ground field QQ"""
    return QQ(int(value.numerator), int(value.denominator))


def to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def monomial(q_power: int = 0, h_power: int = 0, u_power: int = 0) -> Monomial:
    return (q_power, 0, h_power, u_power)


def only_axes(poly: PolyElement, *axes: int) -> bool:
    """Whether every monomial of `poly` uses the given generators only"""
    return all(
        exponent == 0 for monom in poly for axis, exponent in enumerate(monom) if axis not in axes
    )


def q_slice(poly: PolyElement, n: int) -> PolyElement:
    """The coefficient of q^n, itself a polynomial in the remaining generators"""
    return SERIES_RING(
        {(0,) + monom[1:]: c for monom, c in poly.items() if monom[Q_AXIS] == n}
    )
