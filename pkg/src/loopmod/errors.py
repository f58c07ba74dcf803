"""Exception hierarchy.

Every error carries a stable ``code`` string; the CLI prints it in its JSON
error payload, so codes must never be renamed.
"""


class LoopmodError(Exception):
    code = "LoopmodError"


class DivisionByZero(LoopmodError, ZeroDivisionError):
    code = "DivisionByZero"


class NegativeValuation(LoopmodError, ValueError):
    code = "NegativeValuation"


class NonIntegerResult(LoopmodError, ArithmeticError):
    code = "NonIntegerResult"


class TraceNotInteger(LoopmodError, ArithmeticError):
    code = "TraceNotInteger"


class TrivialTuple(LoopmodError, ValueError):
    code = "TrivialTuple"


class NotPeriodic(LoopmodError, ValueError):
    code = "NotPeriodic"


class FactoredFormRequired(LoopmodError, ValueError):
    code = "FactoredFormRequired"


class NotADivisor(LoopmodError, ValueError):
    code = "NotADivisor"


class PoleAtQSquared(LoopmodError, ZeroDivisionError):
    code = "PoleAtQSquared"


class UnsupportedTuple(LoopmodError, ValueError):
    code = "UnsupportedTuple"


class ConfigError(LoopmodError, ValueError):
    code = "ConfigError"


class FormatMismatch(LoopmodError, ValueError):
    code = "FormatMismatch"
