class BifixError(Exception):
    """Base class for library errors."""


class InputError(BifixError, ValueError):
    """Malformed input: bad regex, unknown symbol, bad file."""


class PreconditionError(BifixError, ValueError):
    """An operation was called outside its domain (e.g. a non-bifix code)."""


class CapExceeded(BifixError):
    """A configured size cap (monoid, group, factor length) was hit."""


class NotStabilized(BifixError):
    """A bounded semi-decision did not stabilize within its window."""
