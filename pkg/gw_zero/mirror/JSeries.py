from fractions import Fraction
from typing import Optional

from gw_zero.GeometryConfig import GeometryConfig
from gw_zero.cohomology.ProjClass import ProjClass
from gw_zero.exceptions import MirrorError, SeriesDomainError
from gw_zero.series.HbarLaurent import HbarLaurent
from gw_zero.series.TruncatedSeries import TruncatedSeries

RAW_I = 'raw-I'
NORMALIZED_J = 'normalized-J'
BRACKET = 'bracket'


class MirrorConfig:
    """
    Inputs of the hypergeometric pipeline: the geometry, the q-order D and the lowest
    hbar exponent kept. The default window -(index*D + r) holds every term of the
    I-series through degree D.
    """

    __slots__ = ('geometry', 'q_order', 'hbar_window')

    def __init__(self, geometry: GeometryConfig, q_order: int, hbar_window: Optional[int] = None):
        if geometry.index < 0:
            raise MirrorError(
                f'{geometry} has criticality index {geometry.criticality_index} > r + 1; '
                'only Fano and Calabi-Yau configurations have a hypergeometric mirror'
            )
        if q_order < 0:
            raise ValueError(f'q_order must be nonnegative, got {q_order}')
        self.geometry = geometry
        self.q_order = int(q_order)
        self.hbar_window = self.required_window() if hbar_window is None else int(hbar_window)

    def required_window(self) -> int:
        return -(self.geometry.index * self.q_order + self.geometry.r)

    @property
    def r(self) -> int:
        return self.geometry.r

    def __repr__(self):
        return (
            f'MirrorConfig({self.geometry!r}, q_order={self.q_order}, '
            f'hbar_window={self.hbar_window})'
        )


class JSeries:
    """
    A series in q (or Q after the mirror map) whose coefficients are HbarLaurent
    values in H*(P^r)[hbar, 1/hbar]. `kind` records whether this is the raw
    hypergeometric I-series, the normalized J-series, or a bracket assembled
    from correlators.
    """

    __slots__ = ('series', 'kind')

    def __init__(self, series: TruncatedSeries, kind: str = RAW_I):
        if series.domain[0] != 'hbar':
            raise SeriesDomainError(f'A JSeries needs HbarLaurent coefficients, got {series.domain}')
        if kind not in (RAW_I, NORMALIZED_J, BRACKET):
            raise ValueError(f'Unknown JSeries kind {kind!r}')
        self.series = series
        self.kind = kind

    @property
    def r(self) -> int:
        return self.series.domain[1]

    @property
    def order(self) -> int:
        return self.series.order

    def __getitem__(self, d: int) -> HbarLaurent:
        return self.series[d]

    def coefficient(self, d: int, h_power: int, hbar_exponent: int) -> Fraction:
        """The rational coefficient of q^d H^h_power hbar^hbar_exponent"""
        return self.series[d].coefficient(h_power, hbar_exponent)

    def component(self, h_power: int, hbar_exponent: int) -> TruncatedSeries:
        """The rational q-series sitting in one (H, hbar) slot"""
        return TruncatedSeries(
            [self.coefficient(d, h_power, hbar_exponent) for d in range(self.order + 1)],
            self.order,
        )

    def times_class(self, cls: ProjClass) -> 'JSeries':
        return JSeries(self.series * cls, self.kind)

    def truncate(self, order: int) -> 'JSeries':
        return JSeries(self.series.truncate(order), self.kind)

    def agrees_with(self, other: 'JSeries') -> bool:
        """Coefficient-by-coefficient equality through the smaller order, ignoring `kind`"""
        order = min(self.order, other.order)
        return all(self[d] == other[d] for d in range(order + 1))

    def __eq__(self, other):
        if not isinstance(other, JSeries):
            return NotImplemented
        return self.kind == other.kind and self.series == other.series

    def __repr__(self):
        return f'JSeries({self.kind}, order={self.order}, r={self.r})'

    def __str__(self):
        return '\n'.join(f'q^{d}: {self[d]}' for d in range(self.order + 1))
