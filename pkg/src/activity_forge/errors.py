"""Exception hierarchy shared by every module of the package."""


class ActivityForgeError(Exception):
    """Base class for all errors raised by activity_forge."""


class InvalidSubsetError(ActivityForgeError, ValueError):
    """An edge subset names an edge id outside ``0..m-1``."""


class InvalidGraphError(ActivityForgeError, ValueError):
    pass


class InvalidOrderError(ActivityForgeError, ValueError):
    """An edge order is not a permutation of the edge ids."""


class NotSpanningForestError(ActivityForgeError, ValueError):
    """Activities are only defined relative to a spanning forest."""


class TripleError(ActivityForgeError, ValueError):
    """A forest triple violates one of its invariants."""


class ForestNotSpanningError(TripleError, NotSpanningForestError):
    pass


class DeletionNotActiveError(TripleError):
    pass


class AdditionNotActiveError(TripleError):
    pass


class GuardExceededError(ActivityForgeError):
    """A 2^m enumeration was requested beyond the configured edge limit."""

    def __init__(self, m, limit):
        super().__init__(f"{m} edges exceeds the exhaustive limit of {limit}")
        self.m = m
        self.limit = limit


class PartitionViolation(ActivityForgeError, AssertionError):
    """The forest triples failed to partition the power set of E."""


class MissingVariableError(ActivityForgeError, KeyError):
    pass


class ParseError(ActivityForgeError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
