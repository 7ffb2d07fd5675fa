"""lahlab: exact Lah, Stirling, Laguerre and exponential-polynomial identities."""

from .derivatives import Method, applicable_methods, derive, evaluate_form, taylor_oracle
from .errors import DegenerateInputError, DomainError, UsageError
from .identities import Suite, run_suite
from .models import DerivClosedForm, DerivSpec, IdentityReport
from .polynomials import Poly, bell_poly, laguerre
from .sequences import lah, stirling_first, stirling_second

__all__ = [
    "DegenerateInputError",
    "DerivClosedForm",
    "DerivSpec",
    "DomainError",
    "IdentityReport",
    "Method",
    "Poly",
    "Suite",
    "UsageError",
    "applicable_methods",
    "bell_poly",
    "derive",
    "evaluate_form",
    "lah",
    "laguerre",
    "run_suite",
    "stirling_first",
    "stirling_second",
    "taylor_oracle",
]
