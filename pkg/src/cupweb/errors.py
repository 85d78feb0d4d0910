"""Error types shared across the package."""


class SizeLimitError(ValueError):
    """Requested computation exceeds the configured resource limit."""


class BudgetExceededError(RuntimeError):
    """A rewriting loop ran past its step/node budget without finishing."""


class DominanceError(ValueError):
    """Componentwise top-row dominance fails; carries the violating column."""

    def __init__(self, column: int, message: str):
        super().__init__(message)
        self.column = column
