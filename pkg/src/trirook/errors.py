"""Exception hierarchy for trirook.

Every error raised by the library derives from TriRookError so callers
(notably the CLI) can separate domain failures from programming errors.
"""


class TriRookError(Exception):
    """Base class for all trirook domain errors."""


class DimensionMismatch(TriRookError):
    """Two values built over different ground sets {1..n} were combined."""


class CardinalityMismatch(TriRookError):
    """A k-subset operation received subsets of different sizes."""


class DuplicateDomain(TriRookError):
    """A partial map was given two pairs with the same source."""


class DuplicateRange(TriRookError):
    """A partial map was given two pairs with the same image."""


class IndexOutOfRange(TriRookError):
    """A position lies outside {1..n}, or n itself is out of bounds."""


class NotARookMatrix(TriRookError):
    """A 0/1 matrix has more than one 1 in some row or column."""


class ParseError(TriRookError):
    """Malformed textual input.  Carries the 0-based offset of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BoundExceeded(TriRookError):
    """An exhaustive sweep was requested beyond its documented bound."""


class NotInBn(TriRookError):
    """The element is not order preserving and order decreasing."""


class InvalidBallot(TriRookError):
    """A +-1 sequence violates the ballot invariants."""


class NotDownClosed(TriRookError):
    """A purported module basis is not closed under the dominance order."""


class InvalidRange(TriRookError):
    """Parameters outside the range where a formula is defined."""
