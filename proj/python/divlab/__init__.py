"""Finite diversities: exact axioms, tight spans, hyperconvexity, fixed points."""

from ._divlab import *  # noqa: F401,F403

__version__ = "0.1.0"
