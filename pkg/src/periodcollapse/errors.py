"""Exception hierarchy shared by every module of the package."""


class PeriodCollapseError(Exception):
    """Base class for all errors raised by this package."""


class ContextMismatchError(PeriodCollapseError, ValueError):
    """Operands live in different quadratic fields."""


class ConstraintError(PeriodCollapseError, ValueError):
    """Construction input violates a precondition of the construction."""


class DomainError(PeriodCollapseError, ValueError):
    """Argument outside the domain of an operation."""


class ParseError(PeriodCollapseError, ValueError):
    """Malformed literal or scene text.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
