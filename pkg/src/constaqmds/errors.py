"""Exception types raised across the package."""


class CodeError(Exception):
    """Base class for all package errors."""


class NotPrime(CodeError, ValueError):
    pass


class NotPrimePower(CodeError, ValueError):
    pass


class EvenCharacteristic(CodeError, ValueError):
    pass


class DivisionByZero(CodeError, ZeroDivisionError):
    pass


class FieldMismatch(CodeError, TypeError):
    pass


class NotADivisor(CodeError, ValueError):
    pass


class OddR(CodeError, ValueError):
    pass


class EvenR(CodeError, ValueError):
    pass


class ROne(CodeError, ValueError):
    pass


class RTooLarge(CodeError, ValueError):
    pass


class DeltaOutOfRange(CodeError, ValueError):
    pass


class DOutOfRange(CodeError, ValueError):
    pass


class ElementsOutsideOmega(CodeError, ValueError):
    pass


class InternalDivisibilityFailure(CodeError, RuntimeError):
    pass


class MessageTooLong(CodeError, ValueError):
    pass


class LengthMismatch(CodeError, ValueError):
    pass


class NotACodeword(CodeError, ValueError):
    pass


class DimensionContradiction(CodeError, RuntimeError):
    pass


class NotDualContaining(CodeError, ValueError):
    pass


class EquivalenceViolation(CodeError, RuntimeError):
    """Two dual-containment tests disagreed on the same defining set."""

    def __init__(self, witness, detail=""):
        self.witness = tuple(witness)
        super().__init__(f"dual-containment tests disagree on Z={list(self.witness)} {detail}".rstrip())
