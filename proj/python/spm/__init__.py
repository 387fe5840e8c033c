"""Exact counting of disjoint pairs of S-permutation matrices.

Thin wrapper around the compiled extension; see the individual functions'
docstrings and the project README for the counting conventions (big counts
are Python ints, per-class characteristics are fractions.Fraction).
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
