"""Exception types shared by every module of the package."""


class TLWeylError(Exception):
    """Base class for all errors raised by tlweyl."""


class InputError(TLWeylError, ValueError):
    """Malformed input: letters out of range, empty sequences, bad sets."""


class CapacityError(TLWeylError, ValueError):
    """The requested rank exceeds what an exhaustive routine supports."""


class DomainError(TLWeylError, ValueError):
    """Input is well formed but outside the operation's domain."""
