from fractions import Fraction
from typing import Iterable, Tuple

import numpy as np

from gw_zero.constants import INTERNAL


class WeightVector:
    """Integer torus weights lambda_0..lambda_r acting on the coordinates of P^r"""

    __slots__ = ('values',)

    def __init__(self, values: Iterable[int]):
        values = tuple(int(v) for v in values)
        if len(values) < 2:
            raise ValueError('A weight vector needs at least two entries')
        if len(set(values)) != len(values):
            raise ValueError(f'Torus weights must be pairwise distinct, got {list(values)}')
        self.values = values

    @property
    def r(self) -> int:
        return len(self.values) - 1

    def as_fractions(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(v) for v in self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        return isinstance(other, WeightVector) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f'WeightVector({list(self.values)})'


def draw_weights(r: int, seed: int, attempt: int = 0) -> WeightVector:
    """
    The `attempt`-th weight vector of the sequence seeded by `seed`: r+1 distinct
    integers sampled from [-WEIGHT_RANGE, WEIGHT_RANGE]. Same inputs, same vector.
    """
    rng = np.random.default_rng([int(seed), int(attempt), int(r)])
    span = np.arange(-INTERNAL.WEIGHT_RANGE, INTERNAL.WEIGHT_RANGE + 1)
    picks = rng.choice(span, size=r + 1, replace=False)
    return WeightVector(int(v) for v in picks)
