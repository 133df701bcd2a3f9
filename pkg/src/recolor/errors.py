"""Shared exception types.

The CLI maps these onto its exit-code contract: InputError -> 2,
BudgetExceededError -> 3, verification mismatches -> 4.
"""


class RecolorError(Exception):
    """Base class for errors raised by this package."""


class InputError(RecolorError, ValueError):
    """Malformed or inconsistent input (bad JSON, out-of-range ids, ...)."""


class BudgetExceededError(RecolorError):
    """A node budget was exhausted before the computation finished."""

    def __init__(self, message, used=None, budget=None):
        super().__init__(message)
        self.used = used
        self.budget = budget


class PreconditionError(RecolorError):
    """A fast-path precondition failed; `predicate` names the failed check."""

    def __init__(self, predicate, message=None):
        super().__init__(message or f"precondition failed: {predicate}")
        self.predicate = predicate


class SizeCapError(RecolorError):
    """An internal safety cap (not the user budget) was exceeded."""


class Check:
    """Boolean verdict carrying a human-readable failure reason."""

    __slots__ = ("ok", "reason")

    def __init__(self, ok, reason=None):
        self.ok = ok
        self.reason = reason

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "Check(ok)"
        return f"Check(failed: {self.reason})"
