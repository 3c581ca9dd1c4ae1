"""Exception types shared across the package.

Each class carries the CLI exit code it maps to.
"""


class ModsumError(Exception):
    exit_code = 3


class InvalidInput(ModsumError, ValueError):
    """Malformed arguments: out-of-range residues, bad sizes, non-edges."""


class IncompatibleModuli(InvalidInput):
    pass


class EmptyOperand(InvalidInput):
    pass


class ParseError(InvalidInput):
    """JSON input that does not match the expected schema."""

    def __init__(self, message, field=None, line=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.field = field
        self.line = line


class InvalidLabeling(InvalidInput):
    """A labeling violates a precondition (non-injective, wrong label count, ...)."""


class BudgetExceeded(ModsumError):
    exit_code = 2
