from fractions import Fraction
from typing import Dict, List

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from gw_zero import GW_LOGGER
from gw_zero.exceptions import DimensionMismatchError
from gw_zero.series.ring import to_fraction, to_qq

# Chern roots of the dual tautological bundle S* on G(2, r+1)
CHERN_RING, x1, x2 = ring('x1, x2', QQ)


class SchurIndex:
    """A two-part partition (a, b), a >= b >= 0, naming the Schur class s_(a,b)"""

    __slots__ = ('a', 'b')

    def __init__(self, a: int, b: int = 0):
        if not (a >= b >= 0):
            raise ValueError(f'Not a two-part partition: ({a}, {b})')
        self.a = a
        self.b = b

    @property
    def size(self) -> int:
        return self.a + self.b

    def fits(self, k: int) -> bool:
        """Whether s_(a,b) is a nonzero class on G(2, k)"""
        return self.a <= k - 2

    def __eq__(self, other):
        return isinstance(other, SchurIndex) and (self.a, self.b) == (other.a, other.b)

    def __lt__(self, other):
        return (self.a, self.b) < (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f'SchurIndex({self.a}, {self.b})'

def sym_top_chern(l: int) -> PolyElement:
    """
    Top Chern class of Sym^l S* in terms of the Chern roots x1, x2 of S*:
    prod_{k=0..l} (k x1 + (l-k) x2)
    """
    poly = CHERN_RING.one
    for k in range(l + 1):
        poly *= k * x1 + (l - k) * x2
    return poly


def schur_expand(poly: PolyElement) -> Dict[SchurIndex, Fraction]:
    """
    Expand a symmetric polynomial in x1, x2 in the Schur basis.

    Multiplying by the Vandermonde (x1 - x2) gives an alternating polynomial whose
    x1^(a+1) x2^b coefficient (a >= b) is the coefficient of s_(a,b).
    """
    swapped = CHERN_RING({(j, i): c for (i, j), c in poly.items()})
    if swapped != poly:
        raise ValueError('schur_expand expects a symmetric polynomial')

    alternant = poly * (x1 - x2)
    expansion = {
        SchurIndex(i - 1, j): to_fraction(c) for (i, j), c in alternant.items() if i > j
    }
    return dict(sorted(expansion.items()))


def schur_to_monomials(expansion: Dict[SchurIndex, Fraction]) -> PolyElement:
    """s_(a,b)(x1, x2) = sum_{k=b..a} x1^k x2^(a+b-k)"""
    poly = CHERN_RING.zero
    for index, c in expansion.items():
        schur = CHERN_RING({(k, index.size - k): QQ(1) for k in range(index.b, index.a + 1)})
        poly += schur * to_qq(Fraction(c))
    return poly


def schubert_line_count(r: int, degrees: List[int]) -> Fraction:
    """
    Number of lines on the zero locus of a section of O(l_1) + ... + O(l_k) on P^r,
    computed on the Grassmannian G(2, r+1) of lines as
    the integral of prod_i c_top(Sym^{l_i} S*).

    :param r: dimension of the ambient projective space
    :param degrees: the positive degrees l_i

    :return: the exact count
    """
    if r < 1:
        raise ValueError(f'Ambient dimension must be at least 1, got {r}')
    if any(l < 1 for l in degrees):
        raise ValueError(f'Bundle degrees must be positive: {degrees}')

    grassmannian_dim = 2 * (r - 1)
    rank = sum(l + 1 for l in degrees)
    if rank != grassmannian_dim:
        raise DimensionMismatchError(
            f'Total rank {rank} of the bundles does not match dim G(2,{r + 1}) = '
            f'{grassmannian_dim}; the line count is not enumerative'
        )

    integrand = CHERN_RING.one
    for l in degrees:
        integrand *= sym_top_chern(l)

    # s_(a,b) vanishes on G(2, r+1) once a > r - 1
    expansion = {
        index: c for index, c in schur_expand(integrand).items() if index.fits(r + 1)
    }
    count = expansion.get(SchurIndex(r - 1, r - 1), Fraction(0))
    GW_LOGGER.debug(f'Schubert line count on P^{r} for degrees {degrees}: {count}')
    return count
