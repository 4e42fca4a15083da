"""Exact log-concavity certificates for triangle transforms.

Thin re-export of the compiled module; all arithmetic is exact, rationals
cross the boundary as strings like ``"-2/3"``.
"""

from ._lcpos import *  # noqa: F401,F403
from ._lcpos import __version__  # noqa: F401
