"""Exception hierarchy shared by the library and the command line."""


class MonogensError(Exception):
    """Base class for every error raised by this package."""


class InputError(MonogensError, ValueError):
    """Malformed input: arity mismatch, negative exponent, bad parameters."""


class ParseError(InputError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class DegenerateIdealError(InputError):
    """The zero ideal (or unit ideal) reached an operation that rejects it."""


class HypothesisError(MonogensError):
    """Inputs do not satisfy the hypotheses of the statement being checked.

    Kept distinct from a failed check: a hypothesis violation says nothing
    about the truth of the statement.
    """


class ResourceCeilingError(MonogensError):
    """A configured size ceiling (generator count, box volume) was exceeded."""
