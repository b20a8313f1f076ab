"""Exception types shared across the package."""


class MalformedInputError(ValueError):
    """Input that cannot be parsed into the requested object at all."""


class DomainError(ValueError):
    """Well-formed input that violates a mathematical precondition."""
