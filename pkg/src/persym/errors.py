"""Exception types raised across the package."""


class PersymError(Exception):
    """Base class for every error raised by persym."""


class BudgetError(PersymError, ValueError):
    """An exhaustive scan would exceed the configured bit budget."""

    def __init__(self, needed: int, budget: int, what: str = "enumeration"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what} needs {needed} bits > budget {budget}")


class DegreeOverflowError(PersymError, ValueError):
    pass


class WidthError(PersymError, ValueError):
    """Matrix wider than one machine word (63 columns)."""


class UnsupportedShapeError(PersymError, ValueError):
    pass


class NonIntegralError(PersymError, ArithmeticError):
    """An exact computation that must produce an integer did not."""


class NegativeCountError(PersymError, ArithmeticError):
    pass


class UnderdeterminedError(PersymError, ValueError):
    pass


class InconsistentSystemError(PersymError, ArithmeticError):
    """An overdetermined system has no exact solution."""
