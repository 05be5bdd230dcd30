"""Exception hierarchy shared across the package."""


class ZdkError(Exception):
    """Base class for all library errors."""


class MathError(ZdkError):
    """A mathematical precondition failed (CLI exit code 2)."""


class NonCoprimeModuli(MathError):
    pass


class ArityMismatch(MathError):
    pass


class DimensionMismatch(MathError):
    pass


class UglyPrime(MathError):
    """The prime divides a relevant denominator and cannot be used."""


class ZeroIdeal(MathError):
    pass


class NotZeroDimensional(MathError):
    pass


class ZeroPolynomial(MathError):
    pass


class ConstantPolynomial(MathError):
    pass


class HeuristicExhausted(ZdkError):
    """A randomized loop ran out of attempts (CLI exit code 3)."""


class NonPrimeField(ZdkError):
    pass


class UnknownVariable(ZdkError):
    pass


class ParseError(ZdkError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
