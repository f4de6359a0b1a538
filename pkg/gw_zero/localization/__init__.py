from .FixedGraph import FixedGraph  # noqa: F401
from .graphs import enumerate_graphs  # noqa: F401
from .weights import WeightVector, draw_weights  # noqa: F401
from .CharClassSpec import CharClassSpec  # noqa: F401
from .contribution import graph_contribution  # noqa: F401
from .cache import GraphCache  # noqa: F401
from .integrals import euler_integral, one_point_correlator, sum_contributions  # noqa: F401
