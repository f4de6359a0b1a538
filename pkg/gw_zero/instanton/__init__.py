from .InvariantTable import InvariantTable, InstantonTable  # noqa: F401
from .multicover import invert_multicover, resum_multicover, check_integrality  # noqa: F401
