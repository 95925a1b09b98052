"""Exception types shared across the package."""


class StructuralError(ValueError):
    """Mismatched arities, bad variable indices, malformed inputs."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation (e.g. zero)."""


class ExactDivisionError(ArithmeticError):
    """Exact polynomial division was requested but the quotient is not exact."""


class DegenerateSpecializationError(DomainError):
    """Specializing an annihilator produced the identically zero polynomial."""


class CommonFactorError(DomainError):
    """The shifted components share a factor, contradicting the Keller hypothesis."""


class AnomalyError(RuntimeError):
    """A computation contradicts a theorem it relies on; never silently ignored."""


class ParseError(ValueError):
    """Syntax error in a polynomial expression or map file."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
