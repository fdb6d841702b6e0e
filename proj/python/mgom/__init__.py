"""Noise budgets and design checks for milligram-scale optomechanical systems."""

from mgom._core import *  # noqa: F401,F403
from mgom._core import constants  # noqa: F401

__version__ = "0.1.0"
