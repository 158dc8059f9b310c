"""Intake gesture detection toolkit (python bindings)."""

from ._intakedet import *  # noqa: F401,F403
from ._intakedet import __version__  # noqa: F401
