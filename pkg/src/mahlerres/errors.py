"""Exception types raised by the library and mapped to CLI exit codes."""

from __future__ import annotations


class MahlerError(Exception):
    """Base class for all library errors."""


class ParseError(MahlerError):
    def __init__(self, message: str, position: int = -1):
        super().__init__(f"{message} at position {position}" if position >= 0 else message)
        self.position = position


class UnsupportedError(MahlerError):
    """Input lies outside the supported constant ring or factor shapes."""


class UnsupportedAlgebraicPoint(UnsupportedError):
    pass


class UnsupportedDenominator(UnsupportedError):
    pass


class UnsupportedRadicalIndex(UnsupportedError):
    pass


class IncompatibleRadicands(UnsupportedError):
    pass


class NotInvertible(MahlerError):
    pass


class NotInSupport(MahlerError):
    pass


class WrongKind(MahlerError):
    pass


class NotTorsion(MahlerError):
    pass


class BadTwist(MahlerError):
    pass


class NonRationalResidue(MahlerError):
    pass


class InternalVerificationFailure(MahlerError):
    pass
