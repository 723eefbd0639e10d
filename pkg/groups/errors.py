"""
Exception hierarchy shared by every verifier package.
"""


class ParityGroupError(Exception):
    """Base class for all verifier errors."""


class InvalidElementError(ParityGroupError, ValueError):
    """An element, matrix or vector violates its type invariants."""


class DegreeMismatchError(ParityGroupError, ValueError):
    """Operands of different degree (or partition of wrong degree)."""


class PartitionError(ParityGroupError, ValueError):
    """A partition of {1..n} is malformed."""


class CapExceededError(ParityGroupError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, what: str, limit: int, requested=None):
        self.what = what
        self.limit = limit
        self.requested = requested
        detail = f" (requested {requested})" if requested is not None else ""
        super().__init__(f"{what} exceeds cap {limit}{detail}")


class VerificationFailure(ParityGroupError):
    """A mechanically checked claim failed; carries the first counterexample."""

    def __init__(self, message: str, counterexample=None):
        self.counterexample = counterexample
        super().__init__(message if counterexample is None else f"{message}: {counterexample}")


class DecompositionError(ParityGroupError, ValueError):
    """Numerical decomposition rejected its input or failed a residue check."""


class ResidueCheckError(VerificationFailure, DecompositionError):
    """A decomposition ran but one of its residues exceeded the tolerance."""
