"""Exception hierarchy shared by every module."""


class RichelotError(ValueError):
    """Base class; the CLI maps these to exit code 2."""


class NotPrime(RichelotError):
    pass


class EvenCharacteristic(RichelotError):
    pass


class ReducibleModulus(RichelotError):
    pass


class DivisionByZero(RichelotError, ZeroDivisionError):
    pass


class MixedFields(RichelotError):
    pass


class IncompatibleDegrees(RichelotError):
    pass


class ZeroPolynomial(RichelotError):
    pass


class FieldTooLarge(RichelotError):
    pass


class BoundExceeded(RichelotError):
    pass


class NotSquarefree(RichelotError):
    pass


class DegreeTooSmall(RichelotError):
    pass


class FixedBranchPoint(RichelotError):
    pass


class DegenerateQuotient(RichelotError):
    """A quotient would have genus 0, so the split is not a product of Jacobians."""


class DuplicatePoints(RichelotError):
    pass


class IdenticalBranchSets(RichelotError):
    pass


class ConventionViolation(RichelotError):
    pass


class RangeViolation(RichelotError):
    pass


class BudgetExceeded(RichelotError):
    pass


class WrongGenus(RichelotError):
    pass
