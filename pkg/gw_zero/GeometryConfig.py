from typing import Dict, Iterable, Optional, Tuple

from gw_zero.cohomology.ProjClass import ProjClass
from gw_zero.constants import GEOMETRY


def _degrees(values: Optional[Iterable[int]], kind: str) -> Tuple[int, ...]:
    degrees = tuple(int(v) for v in (values or ()))
    for v in degrees:
        if v < 1:
            raise ValueError(f'{kind} degrees must be positive integers, got {list(degrees)}')
    return degrees


class BundleSpec:
    """
    A split bundle O(l_1) + ... + O(l_a) + O(-m_1) + ... + O(-m_b) on P^r.

    The O(l) summands (l > 0) are convex, the O(-m) summands (m > 0) concave.
    """

    __slots__ = ('convex_degrees', 'concave_degrees')

    def __init__(self, convex_degrees: Iterable[int] = (), concave_degrees: Iterable[int] = ()):
        object.__setattr__(self, 'convex_degrees', _degrees(convex_degrees, 'Convex'))
        object.__setattr__(self, 'concave_degrees', _degrees(concave_degrees, 'Concave'))

    def __setattr__(self, key, value):
        raise AttributeError('BundleSpec is immutable')

    def __reduce__(self):
        return (BundleSpec, (self.convex_degrees, self.concave_degrees))

    @property
    def is_empty(self) -> bool:
        return not self.convex_degrees and not self.concave_degrees

    @property
    def is_convex(self) -> bool:
        return not self.concave_degrees

    @property
    def degree_sum(self) -> int:
        """sum l_i + sum m_j, the bundle's share of c_1"""
        return sum(self.convex_degrees) + sum(self.concave_degrees)

    def rank_over(self, d: int) -> int:
        """Rank of H^0 of the convex part plus H^1 of the concave part over a degree-d map"""
        convex = sum(l * d + 1 for l in self.convex_degrees)
        concave = sum(m * d - 1 for m in self.concave_degrees)
        return convex + concave

    def __eq__(self, other):
        if not isinstance(other, BundleSpec):
            return NotImplemented
        return (self.convex_degrees, self.concave_degrees) == (
            other.convex_degrees,
            other.concave_degrees,
        )

    def __hash__(self):
        return hash((self.convex_degrees, self.concave_degrees))

    def __repr__(self):
        return f'BundleSpec({list(self.convex_degrees)}, {list(self.concave_degrees)})'

    def __str__(self):
        parts = [f'O({l})' for l in self.convex_degrees]
        parts += [f'O(-{m})' for m in self.concave_degrees]
        return ' + '.join(parts) if parts else '0'


class GeometryConfig:
    """
    Ambient projective space P^r together with the split bundle both pipelines twist by.
    """

    __slots__ = ('r', 'bundle')

    def __init__(self, r: int, bundle: Optional[BundleSpec] = None):
        if int(r) < 1:
            raise ValueError(f'Ambient dimension r must be at least 1, got {r}')
        object.__setattr__(self, 'r', int(r))
        object.__setattr__(self, 'bundle', bundle if bundle is not None else BundleSpec())

    def __setattr__(self, key, value):
        raise AttributeError('GeometryConfig is immutable')

    def __reduce__(self):
        return (GeometryConfig, (self.r, self.bundle))

    @classmethod
    def from_dict(cls, data: Dict) -> 'GeometryConfig':
        return cls(data['r'], BundleSpec(data.get('convex', ()), data.get('concave', ())))

    @classmethod
    def named(cls, name: str) -> 'GeometryConfig':
        """One of the geometries in constants.GEOMETRY, e.g. 'quintic' or 'local-p1'"""
        try:
            return cls.from_dict(GEOMETRY.GEOMETRIES[name.lower()])
        except KeyError as exc:
            raise ValueError(
                f'Unknown geometry {name!r}; choose from {sorted(GEOMETRY.GEOMETRIES)}'
            ) from exc

    def to_dict(self) -> Dict:
        return {
            'r': self.r,
            'convex': list(self.bundle.convex_degrees),
            'concave': list(self.bundle.concave_degrees),
        }

    @property
    def criticality_index(self) -> int:
        return self.bundle.degree_sum

    @property
    def index(self) -> int:
        """r + 1 - sum l_i - sum m_j: positive for Fano, zero for Calabi-Yau"""
        return self.r + 1 - self.criticality_index

    @property
    def is_calabi_yau(self) -> bool:
        return self.index == 0

    @property
    def zero_locus_dim(self) -> int:
        return self.r - len(self.bundle.convex_degrees)

    def vdim(self, d: int, marks: int = 0) -> int:
        """Virtual dimension of the moduli of degree-d genus-0 stable maps to P^r"""
        return (self.r + 1) * d + self.r - 3 + marks

    def euler_rank(self, d: int) -> int:
        return self.bundle.rank_over(d)

    def euler_class(self) -> ProjClass:
        """Euler class of the convex part: prod l_i * H^(number of convex summands)"""
        coeff = 1
        for l in self.bundle.convex_degrees:
            coeff *= l
        return ProjClass.hyperplane(self.r, len(self.bundle.convex_degrees), coeff)

    def is_extractable(self, d: int) -> bool:
        """
        Whether N_d can be read off J_V: a convex bundle whose zero locus Y has
        one-pointed degree-d moduli of virtual dimension 1.
        """
        return (
            self.bundle.is_convex
            and not self.bundle.is_empty
            and self.index * d + self.zero_locus_dim == 3
        )

    def __eq__(self, other):
        if not isinstance(other, GeometryConfig):
            return NotImplemented
        return (self.r, self.bundle) == (other.r, other.bundle)

    def __hash__(self):
        return hash((self.r, self.bundle))

    def __repr__(self):
        return f'GeometryConfig({self.r}, {self.bundle!r})'

    def __str__(self):
        return f'P^{self.r} with {self.bundle}'
