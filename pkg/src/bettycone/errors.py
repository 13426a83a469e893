"""Exception hierarchy shared by all modules."""


class BettyConeError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(BettyConeError, ValueError):
    pass


class EmptySupportError(BettyConeError, ValueError):
    """A query needs at least one term but the object is zero."""


class NotInConeError(BettyConeError, ValueError):
    """A pair fails the defining equation of the cone."""


class MalformedTripleError(BettyConeError, ValueError):
    """A Betti triple violates a structural precondition (HK, 0/1 ends, ...)."""


class DegenerateChoiceError(BettyConeError):
    """A random "general" choice landed on the degenerate locus; reseed."""


class RealizationFailedError(BettyConeError):
    def __init__(self, message, failed_check=None):
        super().__init__(message)
        self.failed_check = failed_check


class InternalError(BettyConeError, AssertionError):
    """An invariant that the mathematics guarantees was violated."""
