"""Exception hierarchy shared by the library and the CLI."""


class FgzetaError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(FgzetaError):
    """Malformed input text (matrix documents, words, polynomials, systems)."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{loc}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(FgzetaError):
    """Input violates a documented precondition or invariant."""


class ResourceLimitError(FgzetaError):
    """A configured enumeration or memory guard was exceeded."""
