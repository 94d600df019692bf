"""
Error Hierarchy

Input problems (violated preconditions, malformed documents) derive from
``InputError`` and map to CLI exit code 2 / HTTP 422. Numerical failures
derive from ``ComputationError`` and map to exit code 3 / HTTP 409.
"""

from typing import Any, Optional


class MomentsError(Exception):
    """Base class of every error raised on purpose by this package."""


class InputError(MomentsError, ValueError):
    """A precondition of an operation does not hold."""


class TruncationError(InputError):
    """A degree, length or order exceeds the available truncation."""


class SeriesDomainError(InputError):
    """A series has the wrong constant term for exp/log/inverse."""


class ShefferSpecError(InputError):
    """gamma(0) != 1, alpha(0) != 0 or alpha'(0) == 0."""


class MissingSampleError(InputError):
    """A kernel sample k(x_i + x_j) needed for a test is not available."""


class FunctionalLengthError(InputError):
    """The moment functional is too short for the requested computation."""


class ComputationError(MomentsError, ArithmeticError):
    """The input is well formed but the computation cannot succeed."""


class IndefiniteFunctionalError(ComputationError):
    """The functional is not positive, so no representing measure exists."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class BranchError(ComputationError):
    """(1 + lambda)^x is ambiguous: non-integer x with 1 + lambda <= 0."""
