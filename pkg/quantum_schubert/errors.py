class QSCError(Exception):
    pass


class InputError(QSCError, ValueError):
    """Malformed or out-of-range input. The CLI maps this to exit code 1."""
    pass


class ContextMismatchError(InputError):
    pass


class CoefficientOverflowError(QSCError, ArithmeticError):
    pass


class InvariantViolationError(QSCError, AssertionError):
    """A mathematical invariant the code relies on did not hold. Always a bug."""
    pass


class ConfigValidationError(QSCError):
    pass


class NegativeDegreeError(QSCError):
    """A transformation produced a negative q-degree.

    The transformed invariant counts maps of negative degree and is therefore 0, and so is the
    invariant the transformation started from.
    """
    def __init__(self, indices, degree):
        self.indices = indices
        self.degree = degree
        super().__init__(f"Transformed degree is negative ({degree}); both invariants vanish")
