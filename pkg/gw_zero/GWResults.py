from collections import UserList
from fractions import Fraction
from typing import Dict, List, Optional

from gw_zero.export.jsonlite import results_to_jsonlite
from gw_zero.export.table import results_to_table


def rational_str(value: Optional[Fraction]) -> Optional[str]:
    """Exact 'p/q' rendering ('p' for integers); None stays None"""
    return None if value is None else str(Fraction(value))


class DegreeRecord:
    """Everything computed for one degree d"""

    __slots__ = ('degree', 'N', 'K', 'n', 'integral', 'provenance')

    def __init__(
        self,
        degree: int,
        N: Optional[Fraction] = None,
        K: Optional[Fraction] = None,
        n: Optional[Fraction] = None,
        integral: Optional[bool] = None,
        provenance: Optional[str] = None,
    ):
        self.degree = degree
        self.N = N
        self.K = K
        self.n = n
        self.integral = integral
        self.provenance = provenance

    def to_dict(self) -> Dict:
        return {
            'degree': self.degree,
            'N': rational_str(self.N),
            'K': rational_str(self.K),
            'n': rational_str(self.n),
            'integral': self.integral,
            'provenance': self.provenance,
        }

    def __eq__(self, other):
        return isinstance(other, DegreeRecord) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return f'DegreeRecord({self.to_dict()})'


class GWResults(UserList):
    def __init__(self, *args, geometry=None, opts=None):
        super().__init__(*args)
        # the options and geometry the records were computed for
        self.geometry = geometry
        self.runOptions = opts
        self.pipelinesAgree: Optional[bool] = None
        self.elapsed: Optional[float] = None

    def to_dicts(self) -> List[Dict]:
        return [record.to_dict() for record in self]

    def jsonlite(self):
        return results_to_jsonlite(self)

    def table(self) -> str:
        return results_to_table(self)

    def record(self, degree: int) -> DegreeRecord:
        for record in self:
            if record.degree == degree:
                return record
        raise KeyError(f'No record for degree {degree}')
