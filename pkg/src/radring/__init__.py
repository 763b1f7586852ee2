"""radring: arithmetic and structure analysis for Z_n with an adjoined m-th root of r.

The central object is the quotient Z_n[x]/(x^m - r), handled concretely as
length-m coefficient vectors with the root power rule.  On top of the element
arithmetic sit determinant-based unit tests, field/domain classification,
power-map analysis, equal-degree splitting predictions and a polynomial
factorization oracle over F_{p^k}, all cross-checked against each other by
the ``verify`` sweeps.
"""

from .errors import CapExceeded, HypothesisViolation, NotInvertible
from .factor import FactorizationReport, Poly
from .gfq import FieldSpec, FqElement
from .ring import RingElement, RingParams, WITNESS_UNSEARCHED, make_params
from .structure import CountReport, FieldVerdict, SplittingType

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CountReport",
    "FactorizationReport",
    "FieldSpec",
    "FieldVerdict",
    "FqElement",
    "HypothesisViolation",
    "NotInvertible",
    "Poly",
    "RingElement",
    "RingParams",
    "SplittingType",
    "WITNESS_UNSEARCHED",
    "make_params",
    "__version__",
]
