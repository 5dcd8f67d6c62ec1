"""
Errors Module

Exception hierarchy shared by every MHSKit subpackage.
"""

from typing import Optional


class MhsKitError(Exception):
    """Base class for all MHSKit errors."""


class StructureError(MhsKitError, ValueError):
    """Malformed input data: dimension mismatch, non-nested filtration, bad shapes."""


class NotMixedHodgeStructureError(MhsKitError, ValueError):
    """Well-formed filtrations that do not define a mixed Hodge structure."""


class NotPureError(MhsKitError, ValueError):
    """An operation that needs a pure Hodge structure received a mixed one."""


class NoRelativeWeightFiltrationError(MhsKitError, ValueError):
    """The relative weight filtration M(N, W) does not exist."""


class UnsupportedKindError(MhsKitError, ValueError):
    """Descriptor or action kind outside the supported set."""


class InputError(MhsKitError, ValueError):
    """A fixture or command line argument failed validation."""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)


class NumericalOverflowError(MhsKitError, ArithmeticError):
    """A float-mode computation left the representable range."""


class InvariantViolation(MhsKitError, RuntimeError):
    """An internal invariant failed; this is a bug, not bad input."""
