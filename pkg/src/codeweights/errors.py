"""Exception types shared across the package."""


class FieldError(ValueError):
    """Invalid field construction or an undefined field operation."""


class RankDeficientError(ValueError):
    """A generator matrix does not have full row rank."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured word/subspace budget."""

    def __init__(self, needed, budget, what="words"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} {what}, budget is {budget}")


class InterpolationError(ArithmeticError):
    """Interpolation or triangular inversion produced a non-integral value."""


class VerificationError(AssertionError):
    """A structural check that must hold unconditionally has failed."""
