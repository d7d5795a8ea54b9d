"""Exception hierarchy shared by every module of the package."""


class HtpvalError(Exception):
    """Base class for all package errors."""


class DivisionByZero(HtpvalError, ZeroDivisionError):
    pass


class InsufficientPrecision(HtpvalError, ArithmeticError):
    """A truncated series does not carry enough digits to decide the result."""


class NotSimpleRoot(HtpvalError, ValueError):
    """The residue root handed to Hensel lifting is not a simple root."""


class NotARoot(NotSimpleRoot):
    """The residue value is not a root at all (hence not a simple one)."""


class OddLeadingExponent(HtpvalError, ValueError):
    pass


class NonSquareResidue(HtpvalError, ValueError):
    pass


class ZeroInput(HtpvalError, ValueError):
    pass


class InfinityInput(HtpvalError, ValueError):
    pass


class NegativeValue(HtpvalError, ValueError):
    """Element lies outside the valuation ring."""


class ZeroGenerator(HtpvalError, ValueError):
    pass


class FactorizationLimit(HtpvalError, ArithmeticError):
    pass


class UnsupportedValueGroup(HtpvalError, ValueError):
    pass


class ZeroResidue(HtpvalError, ArithmeticError):
    pass


class DegenerateWitness(HtpvalError, ValueError):
    pass


class PointNotOnCurve(HtpvalError, ValueError):
    pass


class SingularCurve(HtpvalError, ValueError):
    pass


class ZeroMultiple(HtpvalError, ValueError):
    pass


class PoleAtPoint(HtpvalError, ValueError):
    pass


class PointAtInfinity(HtpvalError, ValueError):
    pass


class ZeroLambda(HtpvalError, ValueError):
    pass


class EvenM(HtpvalError, ValueError):
    pass


class NoValidSignChoice(HtpvalError, ArithmeticError):
    pass


class UnknownSubcommand(HtpvalError, ValueError):
    """The harness has no suite by that name."""


class InvalidParameter(HtpvalError, ValueError):
    """A harness flag could not be parsed or is out of range."""
