"""Various constants to be used in computations and on the command line,
provided as a convenience to help ensure sensible values."""

from .INTERNAL import *  # noqa: F403 F401
from .METHOD import *  # noqa: F403 F401
from .GEOMETRY import *  # noqa: F403 F401
