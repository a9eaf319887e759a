"""Exception hierarchy shared by every module of the package."""


class VpaError(Exception):
    """Base class for all errors raised by vecprod."""


class FieldMismatch(VpaError, TypeError):
    pass


class DivisionByZero(VpaError, ZeroDivisionError):
    pass


class CharTwoRejected(VpaError, ValueError):
    pass


class NotPrime(VpaError, ValueError):
    pass


class BadScalar(VpaError, ValueError):
    pass


class DimensionMismatch(VpaError, ValueError):
    pass


class DegenerateForm(VpaError, ValueError):
    pass


class NotSymmetric(VpaError, ValueError):
    pass


class ZeroTarget(VpaError, ValueError):
    pass


class OracleTooLarge(VpaError, ValueError):
    pass


class NotAnAlgebra(VpaError, ValueError):
    pass


class BadDimension(VpaError, ValueError):
    pass


class EmptyList(VpaError, ValueError):
    pass


class ZeroMu(VpaError, ValueError):
    pass


class ZeroNorm(VpaError, ValueError):
    pass


class TooManyNorms(VpaError, ValueError):
    pass


class NotIndependent(VpaError, ValueError):
    pass


class NormMismatch(VpaError, ValueError):
    pass


class VerificationFailed(VpaError, AssertionError):
    pass


class NotComposition(VpaError, ValueError):
    pass


class CommutatorEscapesComplement(VpaError, ValueError):
    pass


class ShapeError(VpaError, ValueError):
    pass


class SchemaError(VpaError, ValueError):
    """Malformed algebra document; ``path`` locates the offending JSON node."""

    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path
