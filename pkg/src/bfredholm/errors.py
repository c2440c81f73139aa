"""Error taxonomy shared across the package.

The split matters operationally: scope refusals (ScopeLimitError) and
unavailable structure (LiftingUnavailableError) are expected outcomes the
caller may handle, while InternalInconsistencyError signals that an exact
post-hoc verification failed and therefore marks a defect, never an input
problem.
"""

from __future__ import annotations


class BFredholmError(Exception):
    """Base class for all package-specific errors."""


class NotInAlgebraError(BFredholmError):
    """A matrix does not lie in the span of an algebra's basis."""


class ClosureCapError(BFredholmError):
    """Multiplicative closure exceeded the configured dimension cap."""


class NotAHomomorphismError(BFredholmError):
    """A coordinate map failed the unital/multiplicative verification."""


class LiftingUnavailableError(BFredholmError):
    """No lifting oracle: kernel not nilpotent, element not in range,
    or an operation requiring a surjective homomorphism got one that isn't."""


class InternalInconsistencyError(BFredholmError):
    """An exact re-verification failed.  Indicates a defect in this package."""


class ScopeLimitError(BFredholmError):
    """The request is outside the documented decidable scope."""


class DiagonalAlignmentError(BFredholmError):
    """Diagonal-element arithmetic on atoms with incompatible index structure."""


class WorkspaceError(BFredholmError):
    """Workspace file or mini-language input rejected; message carries a position."""
