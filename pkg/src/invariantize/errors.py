"""Shared exception types.

Every failure mode that callers are expected to catch lives here, so the
command-line layer can map exceptions to exit codes in one place.
"""


class InvariantizeError(Exception):
    """Base class for all package-specific errors."""


class PreconditionViolated(InvariantizeError):
    """An operation's stated precondition does not hold for the given input."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceeded(InvariantizeError):
    """A search or closure exceeded its configured size budget."""


class InvariantViolation(InvariantizeError):
    """An internal consistency check failed; the instance broke its contract."""


class ArityMismatch(InvariantizeError):
    """A predicate or word was applied to the wrong number of arguments."""


class ParseError(InvariantizeError):
    """Malformed textual input (words, tables, point files, ...)."""


class VariableError(ParseError):
    """A word's variables are repeated or out of order."""


class NotAGroup(InvariantizeError):
    """A multiplication table fails one of the group axioms."""

    def __init__(self, axiom: str, witness=None):
        super().__init__(f"not a group: {axiom} fails (witness: {witness!r})")
        self.axiom = axiom
        self.witness = witness


class NotNormal(InvariantizeError):
    """A subgroup argument was required to be normal but is not."""


class DuplicatePoints(InvariantizeError):
    """A point set contains a repeated point."""
