class GkSepError(Exception):
    pass


class Indeterminate(GkSepError):
    """A resource bound was hit before an answer could be decided."""


class CapExceeded(Indeterminate):
    def __init__(self, cap: int, partial=None):
        super().__init__(f"separator enumeration exceeded cap of {cap}")
        self.cap = cap
        self.partial = partial


class BudgetExhausted(Indeterminate):
    def __init__(self, budget: int, what: str = "search"):
        super().__init__(f"{what} exhausted its budget of {budget} nodes")
        self.budget = budget


class NotInClassError(GkSepError):
    """Raised by strict-mode solvers when the input violates their class precondition."""
