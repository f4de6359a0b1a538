from fractions import Fraction
from typing import Dict

from gw_zero import GW_LOGGER
from gw_zero.instanton.InvariantTable import InstantonTable, InvariantTable


def _divisors_above_one(d: int):
    return [k for k in range(2, d + 1) if d % k == 0]


def invert_multicover(N: InvariantTable) -> InstantonTable:
    """
    Instanton numbers from N_d = sum_{k | d} n_{d/k} / k^3, solved in increasing d:
    n_d = N_d - sum_{k | d, k > 1} n_{d/k} / k^3.
    """
    n: Dict[int, Fraction] = {}
    for d, value in N.items():
        n[d] = value - sum((n[d // k] / k**3 for k in _divisors_above_one(d)), Fraction(0))
    table = InstantonTable(n, N)
    for d, integral in table.integrality_report.items():
        if not integral:
            GW_LOGGER.warning(f'Instanton number n_{d} = {n[d]} of {N.geometry} is not an integer')
    return table


def resum_multicover(T: InstantonTable) -> Dict[int, Fraction]:
    """The N_d recovered from instanton numbers; inverse of invert_multicover"""
    return {
        d: sum((T[d // k] / k**3 for k in range(1, d + 1) if d % k == 0), Fraction(0))
        for d, _ in T.items()
    }


def check_integrality(T: InstantonTable) -> Dict[int, bool]:
    """Per-degree integrality flags; a non-integral value is reported, never raised"""
    return dict(T.integrality_report)
