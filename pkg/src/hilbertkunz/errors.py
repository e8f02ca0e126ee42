"""Exception hierarchy.

Everything raised on purpose derives from :class:`HKError`.  Precondition
failures share :class:`PreconditionViolated` so the CLI can map them to a
single exit code.
"""


class HKError(Exception):
    pass


class PreconditionViolated(HKError, ValueError):
    pass


class NotPrime(PreconditionViolated):
    pass


class DivisionByZero(HKError, ZeroDivisionError):
    pass


class NotHomogeneous(PreconditionViolated):
    pass


class ZeroPolynomial(PreconditionViolated):
    pass


class TooLarge(PreconditionViolated):
    pass


class CharacteristicMismatch(PreconditionViolated):
    pass


class CuspidalInput(PreconditionViolated):
    pass


class EvenModulus(PreconditionViolated):
    pass


class BadCharacteristic(PreconditionViolated):
    pass


class BadCongruence(PreconditionViolated):
    pass


class BadParameter(PreconditionViolated):
    pass


class NonIntegralFormula(HKError, ArithmeticError):
    """A closed form was evaluated off the congruence class where it is integral."""


class ParseError(HKError, ValueError):
    pass
