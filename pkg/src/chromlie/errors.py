"""Exception types shared across the package."""


class GraphParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """A brute-force enumeration would exceed its configured step budget."""


class IntegralityError(ArithmeticError):
    """An exact quantity that must be an integer (or non-negative) is not.

    This always indicates a bug; values are never rounded.
    """


class BoundTooSmall(ValueError):
    """A multiplicity table or series does not reach the height requested."""
