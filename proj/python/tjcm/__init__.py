"""Two-mode multiphoton Jaynes-Cummings simulation."""

from ._tjcm import *  # noqa: F401,F403
