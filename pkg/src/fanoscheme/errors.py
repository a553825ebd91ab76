class FanoError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FanoError, ValueError):
    """An argument lies outside the range where an operation is defined."""


class EmptySchemeError(DomainError):
    """The requested Fano scheme has no points."""


class ParseError(DomainError):
    """An input document is malformed (bad JSON, wrong shape, non-rational entry)."""


class InvariantError(DomainError):
    """An input object violates a structural invariant (zero block, span, ...)."""


class ResourceError(FanoError, RuntimeError):
    """An enumeration would exceed a configured size cap."""
