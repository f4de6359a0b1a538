from .TruncatedSeries import TruncatedSeries, coefficient_domain  # noqa: F401
from .HbarLaurent import HbarLaurent  # noqa: F401
from .functions import (  # noqa: F401
    series_mul,
    series_invert,
    series_exp_log,
    series_compose,
    exp_reversion,
)
