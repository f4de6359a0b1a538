# backport of importlib.metadata for python < 3.8
from importlib_metadata import PackageNotFoundError, version

## Setup logging now, so it's available if __version__ fails:
import logging

GW_LOGGER = logging.getLogger(__name__)
# Add null handle so we do nothing by default. It's up to whatever
# imports us, if they want logging.
GW_LOGGER.addHandler(logging.NullHandler())

try:
    __version__ = version(__name__)
except PackageNotFoundError as e:
    msg = str(
        'package is not installed!\n'
        'Install in editable/develop mode via (from the top of this repo):\n'
        '   python3 -m pip install -e .\n'
        'Or, to just get the version number use:\n'
        '   python setup.py --version'
    )
    print(msg)
    GW_LOGGER.exception(msg)  # type: ignore # noqa: F821
    raise PackageNotFoundError("Install with 'python3 -m pip install -e .' to use") from e

from .exceptions import *  # noqa: F403 F401 E402
from .constants import (  # noqa: F401 E402
    INTERNAL,  # noqa: F401 E402
    METHOD,  # noqa: F401 E402
    GEOMETRY,  # noqa: F401 E402
)
from .series import *  # noqa: F403 F401 E402
from .cohomology import *  # noqa: F403 F401 E402
from .GeometryConfig import GeometryConfig, BundleSpec  # noqa: F401 E402
from .localization import *  # noqa: F403 F401 E402
from .mirror import *  # noqa: F403 F401 E402
from .instanton import *  # noqa: F403 F401 E402
from .RunOptions import RunOptions, validators  # noqa: F401 E402
from .GWResults import GWResults, DegreeRecord  # noqa: F401 E402
from .export import *  # noqa: F403 F401 E402
from .run import *  # noqa: F403 F401 E402
