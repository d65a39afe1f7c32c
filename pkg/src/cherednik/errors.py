"""Exception hierarchy shared by every module of the package."""


class CherednikError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(CherednikError, ValueError):
    pass


class EvenCharacteristic(CherednikError, ValueError):
    pass


class BadDegree(CherednikError, ValueError):
    pass


class FieldTooLarge(CherednikError, ValueError):
    pass


class DivisionByZero(CherednikError, ZeroDivisionError):
    pass


class ContextMismatch(CherednikError, ValueError):
    pass


class Singular(CherednikError, ArithmeticError):
    pass


class DimensionMismatch(CherednikError, ValueError):
    pass


class ExpressionSyntaxError(CherednikError, SyntaxError):
    """Raised by the expression parser; ``position`` is a 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ExponentOnS(ExpressionSyntaxError):
    pass


class BadParameter(CherednikError, ValueError):
    pass


class NotScalar(CherednikError, ArithmeticError):
    def __init__(self, element):
        super().__init__(f"central element {element} does not act as a scalar")
        self.element = element


class NotScalarOnBlock(CherednikError, ArithmeticError):
    pass


class Inconclusive(CherednikError, RuntimeError):
    def __init__(self, budget, what="test"):
        super().__init__(f"{what} inconclusive after {budget} attempts")
        self.budget = budget


class BudgetExceeded(CherednikError, RuntimeError):
    pass
