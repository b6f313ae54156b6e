"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class IntreconError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class SizeLimitExceeded(IntreconError):
    pass


class NotInterval(IntreconError):
    """Raised when a graph has no interval representation.

    ``witness`` is either ``("cycle", [v0, v1, ...])`` for an induced cycle of
    length at least four or ``("asteroidal_triple", [a, b, c])``.
    """

    def __init__(self, witness: tuple[str, list[int]]):
        kind, vertices = witness
        super().__init__(f"not an interval graph: {kind} {vertices}")
        self.witness = witness


class NotConnected(IntreconError):
    pass


class HasUniversalVertex(IntreconError):
    pass


class InvalidVertexSet(IntreconError):
    pass


class DegreeTooSmall(IntreconError):
    pass


class RepresentationMismatch(IntreconError):
    pass


class NotASeparation(IntreconError):
    pass


class NotClean(IntreconError):
    pass


class IncompatibleParts(IntreconError):
    pass


class NotLinearlyOrdered(IntreconError):
    pass


class PreconditionUnverifiable(IntreconError):
    pass


class OrderTooSmall(IntreconError):
    pass


class NotApplicable(IntreconError):
    """A deck-level procedure was called outside its graph class."""


class NotIntervalDeck(IntreconError):
    pass


class AmbiguousDeck(IntreconError):
    pass


class CaseUnmatched(IntreconError):
    pass
