"""Exception types raised across the package."""


class BHError(Exception):
    """Base class for all errors raised by bhcurve."""


class NotPrime(BHError, ValueError):
    pass


class NotAPrimePower(BHError, ValueError):
    pass


class ReducibleModulus(BHError, ValueError):
    pass


class NotASubfieldOrder(BHError, ValueError):
    pass


class FieldMismatch(BHError, TypeError):
    """Operands live in different fields."""


class ArityMismatch(BHError, ValueError):
    pass


class ZeroDenominator(BHError, ZeroDivisionError):
    pass


class FieldTooSmall(BHError, ValueError):
    pass


class SearchFieldTooSmall(BHError, ValueError):
    """A pulled-back polynomial does not split over the supplied field."""


class SingularInput(BHError, ValueError):
    pass


class ExhaustionBoundExceeded(BHError, ValueError):
    pass


class NotADivisor(BHError, ValueError):
    pass


class NotRationalOverFq2(BHError, ValueError):
    pass


class WitnessUnavailable(BHError):
    """No local equation could be certified at an intersection point."""


class IdenticalCurves(BHError, ValueError):
    pass


class NotMinusPPower(BHError, ValueError):
    pass


class VerificationError(BHError, AssertionError):
    """An identity that the construction relies on failed to hold."""
