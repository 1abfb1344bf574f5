"""Tangent cones of Gorenstein non-complete-intersection monomial curves in A^4.

Builds the tangent cone ideal and an explicit minimal graded free
resolution for each supported structure case, certifies it, and checks
the resulting Hilbert function against semigroup order counting.
"""

from .errors import PipelineRejection
from .pipeline import analyze, sweep
from .semigroup import NumericalSemigroup

__all__ = ["NumericalSemigroup", "PipelineRejection", "analyze", "sweep"]
__version__ = "0.1.0"
