"""Exception types shared across the package."""


class FairchkError(Exception):
    """Base class for all package errors."""


class UsageError(FairchkError):
    """An operation was called in a way its contract forbids.

    Examples: passing a vertex set to a manager that does not own it,
    picking from an empty set, running a graph algorithm on an MDP.
    """


class ModelError(FairchkError):
    """A model or pairs file failed to parse or validate.

    `line` is the 1-based line number when the error is tied to one.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvariantViolation(FairchkError):
    """A debug-mode invariant assertion failed."""
