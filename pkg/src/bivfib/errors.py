"""Exception types shared across the package."""


class DomainError(ValueError):
    """An index or parameter lies outside the domain of an operation."""


class NonInvertibleSubstitution(ValueError):
    """A variable with a negative exponent was bound to a non-invertible image."""


class UnboundVariable(KeyError):
    """Evaluation met a variable that the point does not assign."""


class DivisionByZero(ZeroDivisionError):
    """A negative power of a variable was evaluated at zero."""


class PolySyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = "") -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class EmptyGrid(ValueError):
    """No sweep point survives the exclusion predicates."""
