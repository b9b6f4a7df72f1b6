"""Shared exception types for the quatstar package."""


class QuatstarError(Exception):
    """Base class for all package-specific errors."""


class DomainError(QuatstarError):
    """An operation was applied to input it is not defined for."""


class ParseError(QuatstarError):
    """Expression text could not be parsed.

    Carries the 1-based column of the offending token, the token text
    (None at end of input) and the set of token kinds that would have
    been accepted there.
    """

    def __init__(self, message, column, token=None, expected=()):
        self.column = column
        self.token = token
        self.expected = tuple(expected)
        detail = f"column {column}: {message}"
        if token is not None:
            detail += f" (got {token!r})"
        if self.expected:
            detail += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(detail)


class OracleDivergenceError(QuatstarError):
    """The two independent star-product routes disagreed.

    This is always an internal bug in one of the implementations, never a
    statement about the identities under test, and is therefore fatal.
    """


class UnknownIdentityError(QuatstarError):
    """An identity id passed to the verifier does not exist."""
