from ._qbeta import *  # noqa: F401,F403
from ._qbeta import __version__, bundle_format_version  # noqa: F401
