class NodeBudgetExceeded(RuntimeError):
    """Raised when a search visits more nodes than its budget allows."""

    def __init__(self, budget: int):
        super().__init__(f"node budget of {budget} exceeded")
        self.budget = budget


class DomainError(ValueError):
    """Input lies outside the domain of a bijection or formula."""
