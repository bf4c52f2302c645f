"""Exception types shared across the package."""


class CapacityError(Exception):
    """An input exceeds a hard size guard (quadratic-memory or search blowup)."""


class SearchBudgetExceeded(Exception):
    """A solver ran out of its node or time budget before reaching a verdict.

    Carries whatever partial knowledge the search had accumulated so callers
    can report best-known bounds instead of silently discarding work.
    """

    def __init__(self, message: str, *, nodes: int = 0,
                 lower_bound: int | None = None, upper_bound: int | None = None):
        super().__init__(message)
        self.nodes = nodes
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
