"""Exception hierarchy for Zeta Compass."""


class ZetaCompassError(Exception):
    """Base class for every domain error raised by the library."""

    code = "ZetaCompassError"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code


class NonPrimeP(ZetaCompassError):
    code = "NonPrimeP"


class ReducibleModulus(ZetaCompassError):
    code = "ReducibleModulus"


class DegreeMismatch(ZetaCompassError):
    code = "DegreeMismatch"


class DivisionByZero(ZetaCompassError, ZeroDivisionError):
    code = "DivisionByZero"


class BadPrecision(ZetaCompassError):
    code = "BadPrecision"


class FieldMismatch(ZetaCompassError):
    code = "FieldMismatch"


class ZeroInput(ZetaCompassError):
    code = "ZeroInput"


class InsufficientDigitPrecision(ZetaCompassError):
    code = "InsufficientDigitPrecision"


class NotOneUnit(ZetaCompassError):
    code = "NotOneUnit"


class NotMonic(ZetaCompassError):
    code = "NotMonic"


class NotInA(ZetaCompassError):
    """Raised when |a| is not greater than 1, i.e. val(a) >= 0."""

    code = "NotInA"


class EnumerationTooLarge(ZetaCompassError):
    code = "EnumerationTooLarge"


class NoConvergence(ZetaCompassError):
    code = "NoConvergence"


class BadIndex(ZetaCompassError):
    code = "BadIndex"


class ParseError(ZetaCompassError):
    code = "ParseError"


class ConfigError(ZetaCompassError):
    code = "ConfigError"
