"""Exception hierarchy shared by all starpoly modules."""


class StarpolyError(Exception):
    pass


class DegenerateParameterError(StarpolyError, ValueError):
    """A formula denominator vanishes at the requested parameters."""


class RecurrenceMismatchError(StarpolyError, ArithmeticError):
    pass


class SymmetryViolationError(StarpolyError, ValueError):
    pass


class PochhammerZeroError(StarpolyError, ZeroDivisionError):
    pass


class InsufficientTableError(StarpolyError, IndexError):
    pass


class ConvergenceError(StarpolyError, ArithmeticError):
    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class DomainError(StarpolyError, ValueError):
    pass
