"""Exception types shared across the package.

Every error that can surface through the CLI carries a short machine-readable
``code`` used for the single-line error output and exit-status mapping.
"""


class AlgebraError(Exception):
    """Base class for mathematical errors raised by the engine."""

    code = "ALGEBRA"


class FieldMismatchError(AlgebraError):
    code = "FIELD_MISMATCH"


class RingMismatchError(AlgebraError):
    code = "RING_MISMATCH"


class NotInSupportError(AlgebraError):
    """The prime does not contain the annihilator of the module."""

    code = "NOT_IN_SUPPORT"


class ZeroModuleError(AlgebraError):
    """An operation that needs a nonzero module was given the zero module."""

    code = "ZERO_MODULE"


class ImageNotContainedError(AlgebraError):
    """Subquotient input: an image generator is not in the kernel submodule."""

    code = "IMAGE_NOT_CONTAINED"


class VerificationError(AlgebraError):
    """An expensive cross-check contradicted the main computation."""

    code = "VERIFICATION"


class BudgetExceededError(Exception):
    """The cooperative pair-reduction budget ran out."""

    code = "BUDGET"


class ParseError(ValueError):
    """Syntax or name-resolution error with a source position.

    ``position`` is a 0-based character offset into the parsed text (for
    polynomial expressions); ``line``/``column`` are 1-based and used by the
    session-file parser.
    """

    code = "PARSE"

    def __init__(self, message, position=None, line=None, column=None):
        super().__init__(message)
        self.message = message
        self.position = position
        self.line = line
        self.column = column

    def __str__(self):
        loc = ""
        if self.line is not None:
            loc = f" (line {self.line}" + (
                f", column {self.column})" if self.column is not None else ")"
            )
        elif self.position is not None:
            loc = f" (offset {self.position})"
        return self.message + loc


class SessionError(ParseError):
    """Undefined names, duplicate names, or other session-level problems."""

    code = "SESSION"
