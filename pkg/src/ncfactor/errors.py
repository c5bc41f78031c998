"""Exception types shared across the package."""


class NCFactorError(Exception):
    """Base class for all library errors."""


class ContextMismatchError(NCFactorError):
    """Operands live in different fields, symbol rings, or alphabets."""


class UnsupportedFieldError(NCFactorError):
    """The operation needs a finite coefficient field."""


class SearchSpaceTooLargeError(NCFactorError):
    """Exhaustive enumeration would exceed the configured cap."""

    def __init__(self, needed: int, cap: int):
        super().__init__(f"enumeration needs {needed} points, cap is {cap}")
        self.needed = needed
        self.cap = cap


class BudgetExceededError(NCFactorError):
    """A brute-force search exceeded its evaluation budget."""

    def __init__(self, needed: int, budget: int):
        super().__init__(f"search needs {needed} evaluations, budget is {budget}")
        self.needed = needed
        self.budget = budget


class NotAGroebnerBasisError(NCFactorError):
    """Input claimed to be a Groebner basis but an S-polynomial does not reduce to zero."""


class RefinementError(NCFactorError):
    """Two factorizations do not satisfy the refinement hypotheses."""


class ParseError(NCFactorError):
    """Expression text does not conform to the grammar."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected {', '.join(expected)})"
        super().__init__(detail)
        self.position = position
        self.expected = expected
