from .RunOptions import RunOptions  # noqa F401
from .validators import *  # noqa F401 F403
