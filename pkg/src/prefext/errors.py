"""Exception hierarchy shared by every module."""


class InputError(ValueError):
    """Malformed or out-of-range input supplied by the caller."""


class ParseError(InputError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class SemanticError(InputError):
    """Well-formed input that references something undeclared."""


class PreconditionError(ValueError):
    """An algorithm was called on an instance it does not accept."""


class ConsistencyError(ValueError):
    """A set violates a structural property a translation guarantees."""


class ResourceLimitError(RuntimeError):
    """A configured size or wall-clock cap was exceeded."""
