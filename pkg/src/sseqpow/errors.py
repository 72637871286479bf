"""Domain errors shared across the package.

Every error name here is part of the CLI contract: when a command fails on
one of these, the name appears verbatim on stderr and the exit code is 3.
"""


class DomainError(Exception):
    """Base class for all domain errors."""


class PrecisionExhausted(DomainError):
    """A p-adic decision needs valuation >= the working precision.

    Raise precision and retry.
    """


class WindowExceeded(DomainError):
    """A spectral sequence request touches data outside the declared window."""


class ConvergenceUnverifiable(DomainError):
    """The window is too small to certify that pages stabilize."""


class DegreeMismatch(DomainError):
    """Graded arithmetic with inconsistent (bi)degrees."""


class NotAUnit(DomainError):
    """An Adams parameter k is not a unit for the working prime."""


class NotATopologicalGenerator(DomainError):
    """k does not generate (Z/p^2)^x (odd p) or is not ±3 mod 8 (p = 2)."""


class OrderBoundExceeded(DomainError):
    """A group-theoretic request exceeds its documented order bound."""


class NotRealized(DomainError):
    """A character lacks the matrix realization the operation needs."""


class NonInvertibleEuler(DomainError):
    """e(V - W) was requested but e(W) is not invertible."""


class SchemaError(DomainError):
    """Malformed JSON input (CLI exit code 2)."""
