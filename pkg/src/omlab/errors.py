"""Exception hierarchy shared across the package."""


class OmlabError(Exception):
    """Base class for all omlab errors."""


class DomainError(OmlabError):
    """An argument violates a documented precondition."""


class GroundMismatchError(DomainError):
    """Two signed subsets or matroids live on different ground sets.

    Never silently re-indexed: mixing grounds is always a caller bug.
    """


class UnknownElementError(DomainError):
    """An element index or label is not part of the ground set."""


class ValidationError(OmlabError):
    """A family of sets failed the circuit axioms or a signature invariant."""


class CapExceededError(OmlabError):
    """An exhaustive check would exceed its configured ground-size cap."""


class InvariantError(OmlabError):
    """An internal contradiction: a condition guaranteed to hold failed."""


class FormatError(OmlabError):
    """A textual input could not be parsed.

    Carries a 1-based line number when one is known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
