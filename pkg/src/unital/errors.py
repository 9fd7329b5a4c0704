"""Exception types shared across the workbench."""


class UnitalError(Exception):
    """Base class for all workbench errors."""


class InvalidStructure(UnitalError):
    """Input data violates the precondition of an operation."""


class TheoremViolation(UnitalError):
    """A property that must hold for every valid input failed.

    Carries a witness describing the offending instance.  Seeing this
    exception on validated input means either the input lied about its
    invariants or the implementation is wrong.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(UnitalError):
    """An enumeration ran past the configured candidate budget."""
