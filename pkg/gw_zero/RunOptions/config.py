from fractions import Fraction

from gw_zero.constants import INTERNAL, METHOD

config = {
    'convex': [],
    'concave': [],
    'max_degree': 3,
    'method': METHOD.BOTH,
    'char_class': METHOD.EULER,
    'chern_parameter': Fraction(1),
    'seed': INTERNAL.DEFAULT_WEIGHT_SEED,
    'processes': 1,
    'output_format': METHOD.TABLE,
}
