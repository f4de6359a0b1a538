class GWError(Exception):
    """Base gw_zero Exception, not intended for direct use"""


class SeriesError(GWError):
    """Base truncated-series Exception"""


class SeriesDomainError(SeriesError):
    """Raise when coefficient domains disagree or a required unit is not invertible"""


class SeriesPrecisionError(SeriesError):
    """Raise when a truncation order or hbar window cannot hold the requested terms"""


class DimensionMismatchError(GWError):
    """Raise when an integrand's degree does not match the dimension it is integrated over"""


class LocalizationError(GWError):
    """Base torus-localization Exception"""


class WeightDegeneracyError(LocalizationError):
    """Raise when a weight vector produces a zero denominator"""


class MirrorError(GWError):
    """Raise when the hypergeometric pipeline cannot be applied to a configuration"""


class InvariantTableError(GWError):
    """Raise when an invariant table is missing degrees"""


class GraphCacheError(GWError):
    """Raise when a graph cache file fails validation"""


class PipelineDisagreementError(GWError):
    """Raise when localization and mirror pipelines return different invariants"""

    def __init__(self, message: str, rows: list = None):
        super().__init__(message)
        self.rows = rows if rows is not None else []
