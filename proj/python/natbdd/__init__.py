"""Truth tables as natural numbers, pairing functions, and BDD ranking."""

from ._core import *  # noqa: F401,F403
from ._core import Bdd, BddNode, NatBddError, DEFAULT_MAX_VARS

__version__ = "0.1.0"
