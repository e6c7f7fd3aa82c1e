"""Exception hierarchy shared by every module of the package."""


class MultisetError(Exception):
    """Base class for all errors raised by msetmap."""


class OutOfRange(MultisetError, ValueError):
    pass


class UnknownElement(MultisetError, LookupError):
    pass


class SpaceMismatch(MultisetError, ValueError):
    pass


class NotOP(MultisetError, ValueError):
    """A value table violates one of the order-preserving conditions."""


class BadAssignment(MultisetError, ValueError):
    """A root-set table is not a total function into the target universe."""


class BoundMismatch(MultisetError, ValueError):
    pass


class BadOrder(MultisetError, ValueError):
    pass


class BoundTooSmall(MultisetError, ValueError):
    pass


class UnknownClaim(MultisetError, LookupError):
    pass


class ParseError(MultisetError):
    """Syntax or name-resolution error in a declaration document or expression."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self):
        if self.line is None:
            return self.message
        return f"{self.line}:{self.column}: {self.message}"


class UndeclaredName(ParseError):
    pass


class DuplicateName(ParseError):
    pass


class EvalError(MultisetError):
    """Evaluation of an expression failed; ``position`` is a 1-based column."""

    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        super().__init__(str(self))

    def __str__(self):
        if self.position is None:
            return self.message
        return f"column {self.position}: {self.message}"
