"""Distance moments of graphs and graft products.

Rationals cross the boundary as :class:`fractions.Fraction`.
"""

from ._core import *  # noqa: F401,F403
from ._core import GraftMomentsError, __version__  # noqa: F401
