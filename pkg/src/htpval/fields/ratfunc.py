"""Rational functions in one variable over an exact field.

Canonical form: coprime numerator and denominator, denominator monic.  Equality
is therefore component-wise.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DivisionByZero, ZeroInput
from .base import Status, fmt, is_zero, nested_dispatch, rank, var_rank
from .polynomial import Polynomial, poly_divmod, poly_gcd


class _Infinity:
    """The place at infinity of the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "infinity"


INFINITY = _Infinity()


@nested_dispatch
class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str = "Z", *, normalized: bool = False):
        if not isinstance(num, Polynomial):
            num = Polynomial((num,), var)
        if den is None:
            den = Polynomial((1,), num.var)
        elif not isinstance(den, Polynomial):
            den = Polynomial((den,), num.var)
        if not den.coeffs:
            raise DivisionByZero("rational function with zero denominator")
        if not normalized:
            if not num.coeffs:
                den = Polynomial((1,), num.var)
            else:
                g = poly_gcd(num, den)
                if g.degree() > 0:
                    num = poly_divmod(num, g)[0]
                    den = poly_divmod(den, g)[0]
                lc = den.lc()
                if lc != 1:
                    inv = 1 / lc
                    num = num * inv
                    den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def gen(cls, var: str = "Z") -> RationalFunction:
        return cls(Polynomial.gen(var), normalized=True)

    @property
    def var(self) -> str:
        return self.num.var

    @property
    def rank(self) -> int:
        return var_rank(self.var)

    def zero_status(self) -> Status:
        return Status.ZERO if not self.num.coeffs else Status.NONZERO

    def _coerce(self, other):
        r = rank(other)
        if r > self.rank:
            return NotImplemented
        if r == self.rank:
            if isinstance(other, RationalFunction) and other.var == self.var:
                return other
            if isinstance(other, Polynomial) and other.var == self.var:
                return RationalFunction(other, normalized=True)
            return NotImplemented
        return RationalFunction(Polynomial((other,), self.var), normalized=True)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.den.degree() == 0 and self.den.degree() == 0:
            return RationalFunction(self.num * other.num, normalized=True)
        # cross-cancel before multiplying to keep degrees small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = poly_divmod(self.num, g1)[0] if g1.degree() > 0 else self.num
        d2 = poly_divmod(other.den, g1)[0] if g1.degree() > 0 else other.den
        n2 = poly_divmod(other.num, g2)[0] if g2.degree() > 0 else other.num
        d1 = poly_divmod(self.den, g2)[0] if g2.degree() > 0 else self.den
        num, den = n1 * n2, d1 * d2
        if not num.coeffs:
            return RationalFunction(num)
        inv = 1 / den.lc()
        return RationalFunction(num * inv, den * inv, normalized=True)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if not self.num.coeffs:
            raise DivisionByZero("inverse of the zero rational function")
        inv = 1 / self.num.lc()
        return RationalFunction(self.den * inv, self.num * inv, normalized=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num**n, self.den**n, normalized=True)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if is_zero(d):
            raise DivisionByZero(f"pole of {self!r} at {fmt(x)}")
        return self.num(x) / d

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def __repr__(self):
        if self.den.degree() == 0:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def _multiplicity(p: Polynomial, root) -> int:
    lin = Polynomial((-root, 1), p.var)
    k = 0
    while p.coeffs:
        q, r = poly_divmod(p, lin)
        if r.coeffs:
            break
        p = q
        k += 1
    return k


def order_at(f, point) -> int:
    """Order of vanishing of a nonzero rational function at ``Z = point`` or at infinity.

    Poles give negative orders.  ``point`` is a base-field element or :data:`INFINITY`.
    """
    if isinstance(f, Polynomial):
        f = RationalFunction(f, normalized=True)
    if not f.num.coeffs:
        raise ZeroInput("order of the zero function is infinite")
    if point is INFINITY:
        return f.den.degree() - f.num.degree()
    return _multiplicity(f.num, point) - _multiplicity(f.den, point)


def value_at_infinity(f: RationalFunction):
    """Residue of ``f`` at the place at infinity (requires ``order_at(f, INFINITY) >= 0``)."""
    dn, dd = f.num.degree(), f.den.degree()
    if dn > dd:
        raise ValueError("function has a pole at infinity")
    if dn < dd:
        return Fraction(0)
    return f.num.lc() / f.den.lc()
