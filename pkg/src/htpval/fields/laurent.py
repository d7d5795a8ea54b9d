"""Laurent series with explicit absolute precision.

A series is ``sum(coeffs[i] * var**(val + i)) + O(var**prec)``.  Exponents from
``val + len(coeffs)`` up to ``prec - 1`` are known to be zero; exponents at or
beyond ``prec`` are unknown.  ``prec`` may be ``math.inf`` for an exact Laurent
polynomial.

Coefficients are Fractions or, for nested towers, series in a lower-ranked
variable (e.g. a series in ``eps`` whose coefficients are series in ``T``).
The first stored coefficient is never an exact zero, but for nested series it
may be a coefficient whose known digits all vanish; :meth:`valuation` refuses
to guess in that case and raises :class:`InsufficientPrecision`.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import DivisionByZero, InsufficientPrecision, NegativeValue
from .base import Status, fmt, lift, nested_dispatch, rank, status, var_rank

INF = math.inf


def _clip(prec):
    return prec if prec == INF else int(prec)


@nested_dispatch
class TruncatedLaurent:
    __slots__ = ("val", "coeffs", "prec", "var")

    def __init__(self, coeffs=(), val: int = 0, prec=INF, var: str = "T"):
        c = [lift(a) for a in coeffs]
        prec = _clip(prec)
        if prec != INF:
            keep = prec - val
            if keep <= 0:
                c = []
            elif keep < len(c):
                c = c[:keep]
        start = 0
        while start < len(c) and status(c[start]) is Status.ZERO:
            start += 1
        if start:
            c = c[start:]
            val += start
        while c and status(c[-1]) is Status.ZERO:
            c.pop()
        if not c:
            val = 0 if prec == INF else prec
        self.val = val
        self.coeffs = tuple(c)
        self.prec = prec
        self.var = var

    # construction helpers -------------------------------------------------

    @classmethod
    def gen(cls, var: str = "T") -> TruncatedLaurent:
        return cls((1,), 1, INF, var)

    @classmethod
    def monomial(cls, coeff, exponent: int, var: str = "T") -> TruncatedLaurent:
        return cls((coeff,), exponent, INF, var)

    @classmethod
    def bigoh(cls, exponent: int, var: str = "T") -> TruncatedLaurent:
        """The series ``O(var**exponent)``."""
        return cls((), exponent, exponent, var)

    @classmethod
    def from_polynomial(cls, p, var: str = "T", prec=INF) -> TruncatedLaurent:
        return cls(p.coeffs, 0, prec, var)

    # basic queries ----------------------------------------------------------

    @property
    def rank(self) -> int:
        return var_rank(self.var)

    @property
    def is_exact(self) -> bool:
        return self.prec == INF

    def zero_status(self) -> Status:
        if not self.coeffs:
            return Status.ZERO if self.prec == INF else Status.UNKNOWN
        for c in self.coeffs:
            if status(c) is Status.NONZERO:
                return Status.NONZERO
        return Status.UNKNOWN

    def valuation(self):
        """Exponent of the first nonzero term; ``math.inf`` for the exact zero series."""
        if not self.coeffs:
            if self.prec == INF:
                return INF
            raise InsufficientPrecision(f"series is zero to precision {self.var}^{self.prec}")
        if status(self.coeffs[0]) is not Status.NONZERO:
            raise InsufficientPrecision(
                f"leading coefficient of {self.var}^{self.val} is not certified nonzero"
            )
        return self.val

    def relative_precision(self):
        return self.prec - self.val

    def leading_coefficient(self):
        self.valuation()
        return self.coeffs[0]

    def coefficient(self, exponent: int):
        if exponent >= self.prec:
            raise InsufficientPrecision(f"coefficient of {self.var}^{exponent} is beyond precision")
        i = exponent - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def residue(self):
        """Constant term, for elements of the valuation ring."""
        if self.coeffs and self.val < 0:
            if status(self.coeffs[0]) is Status.NONZERO:
                raise NegativeValue(f"series has negative valuation {self.val}")
            raise InsufficientPrecision("cannot certify membership in the valuation ring")
        if not self.coeffs and self.prec <= 0:
            raise InsufficientPrecision("constant term is beyond precision")
        return self.coefficient(0)

    def add_bigoh(self, prec) -> TruncatedLaurent:
        """Forget every term of exponent >= ``prec``."""
        return TruncatedLaurent(self.coeffs, self.val, min(self.prec, _clip(prec)), self.var)

    def as_exact(self) -> TruncatedLaurent:
        """Treat the known digits as an exact Laurent polynomial."""
        return TruncatedLaurent(self.coeffs, self.val, INF, self.var)

    def shift(self, k: int) -> TruncatedLaurent:
        """Multiply by ``var**k``."""
        if not self.coeffs and self.prec == INF:
            return self
        return TruncatedLaurent(self.coeffs, self.val + k, self.prec + k, self.var)

    def map_coeffs(self, fn) -> TruncatedLaurent:
        return TruncatedLaurent([fn(c) for c in self.coeffs], self.val, self.prec, self.var)

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other):
        r = rank(other)
        if r > self.rank:
            return NotImplemented
        if r == self.rank:
            if isinstance(other, TruncatedLaurent) and other.var == self.var:
                return other
            return NotImplemented
        return TruncatedLaurent((other,), 0, INF, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self, other
        if not b.coeffs and b.prec == INF:
            return a
        if not a.coeffs and a.prec == INF:
            return b
        prec = min(a.prec, b.prec)
        v = min(a.val, b.val)
        end = max(a.val + len(a.coeffs), b.val + len(b.coeffs))
        if prec != INF:
            end = min(end, prec)
        out = [Fraction(0)] * max(end - v, 0)
        for src in (a, b):
            off = src.val - v
            for i, c in enumerate(src.coeffs):
                if off + i >= len(out):
                    break
                out[off + i] = out[off + i] + c
        return TruncatedLaurent(out, v, prec, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedLaurent([-c for c in self.coeffs], self.val, self.prec, self.var)

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
        a, b = self, other
        if (not a.coeffs and a.prec == INF) or (not b.coeffs and b.prec == INF):
            return TruncatedLaurent((), 0, INF, self.var)
        prec = min(a.prec + b.val, b.prec + a.val)
        v = a.val + b.val
        n = len(a.coeffs) + len(b.coeffs) - 1
        if prec != INF:
            n = min(n, prec - v)
        if n <= 0 or not a.coeffs or not b.coeffs:
            return TruncatedLaurent((), v, prec, self.var)
        ac, bc = a.coeffs, b.coeffs
        out = []
        for k in range(n):
            lo = max(0, k - len(bc) + 1)
            hi = min(k, len(ac) - 1)
            acc = None
            for i in range(lo, hi + 1):
                t = ac[i] * bc[k - i]
                acc = t if acc is None else acc + t
            out.append(Fraction(0) if acc is None else acc)
        return TruncatedLaurent(out, v, prec, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _divide(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _divide(other, self)

    def inverse(self) -> TruncatedLaurent:
        return _divide(TruncatedLaurent((1,), 0, INF, self.var), self)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncatedLaurent((1,), 0, INF, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        """Equality up to the precision of both operands."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).zero_status() is not Status.NONZERO

    __hash__ = None

    def sqrt(self, sign: int = 1, prec=None) -> TruncatedLaurent:
        from .hensel import sqrt_lift

        return sqrt_lift(self, sign, prec)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if status(c) is Status.ZERO:
                continue
            e = self.val + i
            mono = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            cs = fmt(c) if isinstance(c, Fraction) else f"({c!r})"
            terms.append(cs if not mono else f"{cs}*{mono}")
        if self.prec != INF:
            terms.append(f"O({self.var}^{self.prec})")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def _divide(a: TruncatedLaurent, b: TruncatedLaurent) -> TruncatedLaurent:
    if not b.coeffs:
        if b.prec == INF:
            raise DivisionByZero("division by the zero series")
        raise InsufficientPrecision("divisor is zero to its precision")
    b0 = b.coeffs[0]
    if status(b0) is not Status.NONZERO:
        raise InsufficientPrecision("leading coefficient of divisor is not certified nonzero")
    v = a.val - b.val
    if not a.coeffs and a.prec == INF:
        return a
    rel = min(a.prec - a.val, b.prec - b.val)
    if rel == INF:
        if len(b.coeffs) != 1:
            raise InsufficientPrecision(
                "exact division by a non-monomial has no finite expansion; truncate an operand"
            )
        return TruncatedLaurent([c / b0 for c in a.coeffs], v, INF, a.var)
    inv0 = 1 / b0
    ac, bc = a.coeffs, b.coeffs
    q = []
    for k in range(rel):
        acc = ac[k] if k < len(ac) else Fraction(0)
        for j in range(1, min(k, len(bc) - 1) + 1):
            acc = acc - bc[j] * q[k - j]
        q.append(acc * inv0)
    return TruncatedLaurent(q, v, v + rel, a.var)
