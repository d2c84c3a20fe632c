"""Ring-partitioned WSN cluster planning and simulation."""

from ringcluster._core import *  # noqa: F401,F403

__version__ = "1.0.0"
