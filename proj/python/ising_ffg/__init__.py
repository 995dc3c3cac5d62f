"""Primal and dual importance sampling for Ising partition functions."""

from ._core import *  # noqa: F401,F403
from ._core import IsingError, __doc__  # noqa: F401
