"""Shared exception hierarchy.

Three broad families matter to callers (and to the CLI's exit codes):
input/parse problems, violated mathematical preconditions, and blown
search budgets.
"""


class EqhomError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EqhomError):
    """Malformed file, word, or argument."""


class PreconditionError(EqhomError):
    """A mathematical precondition does not hold for the given input."""


class BudgetError(EqhomError):
    """A configured size or enumeration budget was exceeded."""
