"""Shared exception types.

Exit-code mapping used by the CLI: verification failures (NotInSpaceError,
failed cross-checks) exit 1, usage errors exit 2, and internal invariant
violations (InternalCancellationError) exit 3.
"""

from __future__ import annotations


class PentarcError(Exception):
    """Base class for package-specific failures."""


class PrecisionError(PentarcError):
    """A computation asked for coefficients beyond the known truncation."""


class GammaPoleError(PentarcError, ArithmeticError):
    """Gamma evaluated at a nonpositive integer."""


class NotInSpaceError(PentarcError):
    """Exact decomposition left a nonzero residual."""


class UnsupportedHeckeFieldError(PentarcError):
    """Hecke eigenvalue field has degree > 2 (or could not be certified)."""


class InternalCancellationError(PentarcError):
    """Fractional-exponent coefficients failed to cancel; implementation bug."""
