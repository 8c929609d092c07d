"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """Raised when a computation exceeds a configured resource cap.

    Distinct from any mathematical verdict: callers must not interpret
    this as a positive or negative result.
    """
