"""Universal associative envelopes of trilinear operations on the 2x2 matrix triple system."""

from .freealg import AB, FreePoly, GeneratorSet, UsageError
from .tripleops import TrilinearOp, catalog, lookup

__all__ = ["AB", "FreePoly", "GeneratorSet", "UsageError", "TrilinearOp", "catalog", "lookup"]
__version__ = "0.1.0"
