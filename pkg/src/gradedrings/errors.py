"""Shared exception types."""


class InvalidInput(ValueError):
    """Arguments violate a documented precondition."""


class BudgetError(RuntimeError):
    """An exhaustive enumeration would exceed its budget."""


class InternalInconsistency(RuntimeError):
    """Two procedures that must agree disagreed.  Never expected."""
