"""Exception hierarchy shared by every module."""


class BlockXsatError(Exception):
    """Base class for all errors raised by this package."""


class IndexOutOfRange(BlockXsatError, ValueError):
    pass


class EmptyColumnSupport(BlockXsatError, ValueError):
    """A variable (block) occurs in no clause (contains no point)."""


class DuplicateColumn(BlockXsatError, ValueError):
    """Two columns have the same support in a structure flagged ``simple``."""


class DuplicateIndex(BlockXsatError, ValueError):
    pass


class DegenerateParams(BlockXsatError, ValueError):
    pass


class NotRegular(BlockXsatError, ValueError):
    pass


class NotLinear(BlockXsatError, ValueError):
    pass


class NonUniformBlocks(BlockXsatError, ValueError):
    pass


class PreconditionNotMet(BlockXsatError, ValueError):
    pass


class InstanceTooLarge(BlockXsatError, ValueError):
    pass


class UnknownName(BlockXsatError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class BadResidue(BlockXsatError, ValueError):
    pass


class VerificationError(BlockXsatError, AssertionError):
    """A solver result failed its own invariant check (indicates a bug)."""


class ParseError(BlockXsatError, ValueError):
    """Malformed input text; ``line`` is the 1-based offending line, if known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NegativeLiteral(ParseError):
    pass


class DuplicateLiteral(ParseError):
    pass


class CountMismatch(ParseError):
    pass


class UnusedVariable(ParseError):
    pass


class MeasurementMismatch(ParseError):
    """Declared ``l``/``lambda`` in a design header disagree with the body."""
