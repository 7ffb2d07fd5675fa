"""Exception types raised by lahlab.

All of them subclass ``ValueError`` so callers that only care about bad input
can keep catching that.
"""

from __future__ import annotations


class UsageError(ValueError):
    """An operation was called outside its contract (negative n, bad pairing)."""


class DomainError(ValueError):
    """The inputs are well formed but the value is not representable exactly."""


class DegenerateInputError(DomainError):
    """p = 0 in the derivative lab: the x^(p*k) indexing collapses."""
