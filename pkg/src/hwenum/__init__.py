"""Exact-arithmetic toolkit for harmonic weight enumerators of binary codes.

Subpackages cover GF(2) linear algebra and codeword enumeration (gf2,
catalog), exact polynomial invariant theory (polyring), the discrete
harmonic calculus (discharm, zonal), harmonic weight enumerators (hwe),
combinatorial designs (designs), tetrad systems (tetrads), configuration
checks (config), and theta-series arithmetic (euclid).  The cli module
exposes everything behind a single command-line entry point.
"""

from .errors import ClaimViolationError, ResourceLimitError
from .gf2 import LinearCode, Word, dual, weight_distribution, weight_enumerator
from .catalog import catalog

__all__ = [
    "ClaimViolationError",
    "ResourceLimitError",
    "LinearCode",
    "Word",
    "catalog",
    "dual",
    "weight_distribution",
    "weight_enumerator",
]

__version__ = "0.1.0"
