from ._mbgap import *  # noqa: F401,F403
from ._mbgap import __doc__  # noqa: F401
