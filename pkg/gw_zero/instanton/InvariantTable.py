from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple

from gw_zero.constants import METHOD
from gw_zero.exceptions import InvariantTableError


class InvariantTable:
    """Genus-0 invariants N_d for degrees 1..D of one geometry, tagged with their source"""

    def __init__(
        self,
        entries: Mapping[int, Fraction],
        geometry: str = '',
        provenance: str = METHOD.BOTH,
    ):
        entries = {int(d): Fraction(v) for d, v in entries.items()}
        missing = [d for d in range(1, len(entries) + 1) if d not in entries]
        if missing or any(d < 1 for d in entries):
            raise InvariantTableError(
                f'Invariant degrees must run contiguously from 1, got {sorted(entries)}'
            )
        if provenance not in (METHOD.LOCALIZATION, METHOD.MIRROR, METHOD.BOTH):
            raise ValueError(f'Unknown provenance {provenance!r}')
        self.entries: Dict[int, Fraction] = dict(sorted(entries.items()))
        self.geometry = geometry
        self.provenance = provenance

    @property
    def max_degree(self) -> int:
        return len(self.entries)

    def __getitem__(self, d: int) -> Fraction:
        try:
            return self.entries[d]
        except KeyError as exc:
            raise InvariantTableError(f'No invariant of degree {d} in {self.geometry}') from exc

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self.entries.items())

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, InvariantTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        values = {d: str(v) for d, v in self.entries.items()}
        return f'InvariantTable({values}, geometry={self.geometry!r}, provenance={self.provenance})'


class InstantonTable:
    """
    Instanton numbers n_d and their integrality flags, together with the invariant
    table they were inverted from.
    """

    def __init__(
        self,
        entries: Mapping[int, Fraction],
        source: Optional[InvariantTable] = None,
    ):
        self.entries: Dict[int, Fraction] = {int(d): Fraction(v) for d, v in sorted(entries.items())}
        self.source = source
        self.integrality_report: Dict[int, bool] = {
            d: v.denominator == 1 for d, v in self.entries.items()
        }

    def __getitem__(self, d: int) -> Fraction:
        return self.entries[d]

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self.entries.items())

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        values = {d: str(v) for d, v in self.entries.items()}
        return f'InstantonTable({values})'
