"""Helpers shared by the exact field tower.

Every element type in this package answers the same three-valued question
"is this zero?" through :func:`status`.  Exact types only ever answer ZERO or
NONZERO; truncated series may answer UNKNOWN when all known digits vanish.

Different element types nest (series in ``eps`` over series in ``T``,
polynomials in ``Z`` over either, ...).  Binary operators decide which operand
is the coefficient of the other by comparing variable ranks: the operand whose
variable has the higher rank is the outer one.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import isqrt

VARIABLE_RANK = {"T": 1, "Z": 2, "xi": 2, "eps": 3, "X": 4}
DEFAULT_RANK = 2
TOWER_RANK = 10


class Status(enum.Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    UNKNOWN = "unknown"


def status(x) -> Status:
    method = getattr(x, "zero_status", None)
    if method is not None:
        return method()
    return Status.ZERO if x == 0 else Status.NONZERO


def is_zero(x) -> bool:
    """True only when ``x`` is certainly zero."""
    return status(x) is Status.ZERO


def is_nonzero(x) -> bool:
    """True only when ``x`` is certainly nonzero."""
    return status(x) is Status.NONZERO


def rank(x) -> int:
    r = getattr(x, "rank", None)
    return 0 if r is None else r


def var_rank(name: str) -> int:
    return VARIABLE_RANK.get(name, DEFAULT_RANK)


def lift(c):
    """Promote Python ints to Fractions; leave everything else alone."""
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


def to_fraction(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if it is not a square."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


_REFLECTED = {
    "__add__": "__radd__",
    "__sub__": "__rsub__",
    "__rsub__": "__sub__",
    "__mul__": "__rmul__",
    "__truediv__": "__rtruediv__",
    "__rtruediv__": "__truediv__",
    "__eq__": "__eq__",
}


def nested_dispatch(cls):
    """Let an operand of the same class but a higher-ranked variable act as the outer one.

    Python never tries the reflected method when both operands share a type, so
    ``T-series + eps-series`` would otherwise fail instead of embedding the
    T-series as a coefficient.
    """

    def wrap(name, reflected):
        inner = getattr(cls, name)

        def method(self, other):
            result = inner(self, other)
            if result is NotImplemented and type(other) is type(self) and rank(other) > rank(self):
                return getattr(other, reflected)(self)
            return result

        method.__name__ = name
        method.__doc__ = inner.__doc__
        return method

    for name, reflected in _REFLECTED.items():
        if name in cls.__dict__:
            setattr(cls, name, wrap(name, reflected))
    return cls
