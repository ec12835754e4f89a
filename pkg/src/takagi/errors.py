"""Exception types shared across the package."""


class TakagiError(ValueError):
    """Base class for errors raised by this package."""


class ParseError(TakagiError):
    """A point literal or expansion literal could not be parsed."""


class DomainError(TakagiError):
    """An operation was called outside its domain (e.g. a mirror
    quotient at a dyadic point, or a scan with a non-positive step)."""
