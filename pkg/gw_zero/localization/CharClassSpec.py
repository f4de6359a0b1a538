from fractions import Fraction
from typing import Sequence

from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_mul
from sympy.polys.rings import ring

from gw_zero.constants import METHOD
from gw_zero.series.ring import to_fraction, to_qq

# t marks the cohomological degree in prod (1 + x t)
CHERN_POLY_RING, t = ring('t', QQ)


def elementary_symmetric(values: Sequence[Fraction], k: int) -> Fraction:
    """e_k(values): the t^k coefficient of prod (1 + x t), zero beyond the number of values"""
    if k < 0:
        return Fraction(0)
    generating = CHERN_POLY_RING.one
    for x in values:
        generating = rs_mul(generating, 1 + to_qq(x) * t, t, k + 1)
    return to_fraction(generating.get((k,), QQ(0)))


class CharClassSpec:
    """
    The multiplicative class b applied to the twisting bundle: the Euler class,
    or the Chern polynomial c_s = sum_k s^k c_k at a fixed rational parameter s.
    """

    __slots__ = ('kind', 'parameter')

    def __init__(self, kind: str = METHOD.EULER, parameter=1):
        if kind not in (METHOD.EULER, METHOD.CHERN_POLYNOMIAL):
            raise ValueError(f'Unknown characteristic class {kind!r}')
        self.kind = kind
        self.parameter = Fraction(parameter)

    @classmethod
    def euler(cls) -> 'CharClassSpec':
        return cls(METHOD.EULER)

    @classmethod
    def chern_polynomial(cls, parameter=1) -> 'CharClassSpec':
        return cls(METHOD.CHERN_POLYNOMIAL, parameter)

    @property
    def is_euler(self) -> bool:
        return self.kind == METHOD.EULER

    def evaluate(self, roots: Sequence[Fraction], degree: int) -> Fraction:
        """
        The class at a fixed point with equivariant Chern roots `roots`, keeping only
        its part of cohomological degree `degree` (the part that integrates).
        The Euler class has a single degree, the number of roots.
        """
        if self.is_euler:
            value = Fraction(1)
            for x in roots:
                value *= x
            return value
        return self.parameter**degree * elementary_symmetric(roots, degree)

    def __eq__(self, other):
        return isinstance(other, CharClassSpec) and (self.kind, self.parameter) == (
            other.kind,
            other.parameter,
        )

    def __hash__(self):
        return hash((self.kind, self.parameter))

    def __repr__(self):
        if self.is_euler:
            return 'CharClassSpec(euler)'
        return f'CharClassSpec(chern-polynomial, s={self.parameter})'
