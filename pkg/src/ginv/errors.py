"""Exception hierarchy shared by every backend and algorithm."""


class GinvError(Exception):
    """Base class for all errors raised by :mod:`ginv`."""


class InvalidElement(GinvError):
    """An element does not belong to the ring it is used with."""


class NotAProjection(GinvError):
    """An element was required to satisfy ``p*p = p = p*`` but does not."""


class Unsupported(GinvError):
    """The ring backend lacks a capability the operation needs."""


class InvalidBound(GinvError):
    """A search bound is out of range (for example ``k_max < 1``)."""


class PreconditionFailed(GinvError):
    """An algebraic precondition of an operation does not hold."""


class HypothesisNotMet(GinvError):
    """A caller-supplied witness fails one of the hypothesis equations."""

    def __init__(self, equation: str, message: str | None = None):
        self.equation = equation
        super().__init__(message or f"hypothesis {equation!r} does not hold")


class InternalInconsistency(GinvError):
    """A constructed object failed its own post-verification.

    Raised instead of returning an unverified result.
    """


class InvalidFormat(GinvError):
    """Unknown report format or malformed document."""
