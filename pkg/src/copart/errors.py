"""Exception hierarchy shared by all copart modules."""


class CopartError(Exception):
    pass


class DomainError(CopartError, ValueError):
    """An argument lies outside the domain of the operation."""


class LevelError(DomainError):
    """A root of unity does not live in the requested cyclotomic field."""


class PreconditionError(DomainError):
    """A documented precondition (coprimality, degree bound, ...) failed."""


class ConsistencyError(CopartError, ArithmeticError):
    """Two routes that must agree did not; always signals a bug."""


class ResourceLimitError(CopartError):
    """The request exceeds a configured enumeration or size bound."""
