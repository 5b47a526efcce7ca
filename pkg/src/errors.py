"""Exception hierarchy shared by every layer of the library."""


class AlgebraError(ValueError):
    """Base class for mathematical failures raised by the library."""


class FieldError(AlgebraError):
    """Non-prime modulus or inversion of zero."""


class RingMismatchError(AlgebraError):
    """Operands live in different ambient rings."""


class NotArtinianError(AlgebraError):
    """A colength was requested for a positive-dimensional ideal."""


class NotMPrimaryError(AlgebraError):
    """A length was requested for an ideal that is not primary to the irrelevant ideal."""


class IterationCapError(AlgebraError):
    """A stabilizing chain (saturation, Ratliff-Rush) exceeded its cap."""


class HorizonError(AlgebraError):
    """A numerical sequence did not reach its polynomial regime within the horizon."""


class ReductionNotFoundError(AlgebraError):
    """No verified reduction was found within the trial and scan budget."""


class ConsistencyError(AlgebraError):
    """An internal consistency gate failed."""


class SequenceTooLongError(AlgebraError):
    """Permutation sweep requested for a sequence above the supported length."""


class FiltrationError(AlgebraError):
    """Malformed filtration data or an out-of-range index."""


class SessionError(Exception):
    """Error attached to a location in a session file."""

    def __init__(
        self, message: str, line: int = 0, column: int = 0, token: str | None = None
    ):
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        location = f"{line}:{column}" if line else "?"
        near = f" near {token!r}" if token is not None else ""
        super().__init__(f"{location}: {message}{near}")


class ParseError(SessionError):
    """Lexical or syntactic error."""


class SemanticError(SessionError):
    """Unknown name, duplicate declaration or wrong arity."""


class CommandError(SessionError):
    """Runtime failure of a command, reported at the command's location."""
