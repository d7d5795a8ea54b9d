"""Dense univariate polynomials over an exact (or truncated) coefficient field.

Coefficients are stored in ascending degree order; the leading coefficient is
never an exact zero, and the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_gcd

from ..errors import DivisionByZero
from .base import Status, fmt, is_zero, lift, nested_dispatch, rank, status, var_rank


@nested_dispatch
class Polynomial:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "Z"):
        c = [lift(a) for a in coeffs]
        while c and is_zero(c[-1]):
            c.pop()
        self.coeffs = tuple(c)
        self.var = var

    @classmethod
    def gen(cls, var: str = "Z") -> Polynomial:
        return cls((0, 1), var)

    @classmethod
    def monomial(cls, coeff, degree: int, var: str = "Z") -> Polynomial:
        return cls([0] * degree + [coeff], var)

    @property
    def rank(self) -> int:
        return var_rank(self.var)

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def zero_status(self) -> Status:
        if not self.coeffs:
            return Status.ZERO
        if any(status(c) is Status.NONZERO for c in self.coeffs):
            return Status.NONZERO
        return Status.UNKNOWN

    def _coerce(self, other):
        r = rank(other)
        if r > self.rank:
            return NotImplemented
        if r == self.rank:
            if isinstance(other, Polynomial) and other.var == self.var:
                return other
            return NotImplemented
        return Polynomial((other,), self.var)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.var)

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
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial((), self.var)
        if len(b) == 1:
            s = b[0]
            return Polynomial([c * s for c in a], self.var)
        if len(a) == 1:
            s = a[0]
            return Polynomial([s * c for c in b], self.var)
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if is_zero(x):
                continue
            for j, y in enumerate(b):
                t = x * y
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return Polynomial([Fraction(0) if c is None else c for c in out], self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of polynomials are rational functions")
        result = Polynomial((1,), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Polynomial) and other.var == self.var:
            from .ratfunc import RationalFunction

            return RationalFunction(self, other)
        if rank(other) >= self.rank:
            return NotImplemented
        inv = 1 / lift(other)
        return Polynomial([c * inv for c in self.coeffs], self.var)

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __call__(self, x):
        """Evaluate by Horner's rule at any element supporting ``+`` and ``*``."""
        if not self.coeffs:
            return x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        if len(self.coeffs) == 1:
            acc = acc + x * 0
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self) -> Polynomial:
        return self / self.lc()

    def map_coeffs(self, fn, var: str | None = None) -> Polynomial:
        return Polynomial([fn(c) for c in self.coeffs], self.var if var is None else var)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if is_zero(c):
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            cs = fmt(c)
            if isinstance(c, Fraction):
                if mono and c == 1:
                    cs = ""
                elif mono and c == -1:
                    cs = "-"
            else:
                cs = f"({cs})"
            if cs in ("", "-"):
                terms.append(cs + mono)
            else:
                terms.append(cs + ("*" + mono if mono else ""))
        s = " + ".join(terms)
        return s.replace("+ -", "- ")


def poly_divmod(a: Polynomial, b: Polynomial):
    """Euclidean division over a field: ``a = q*b + r`` with ``deg r < deg b``."""
    if not b.coeffs:
        raise DivisionByZero("polynomial division by zero")
    db = b.degree()
    da = a.degree()
    if da < db:
        return Polynomial((), a.var), a
    r = list(a.coeffs)
    q = [Fraction(0)] * (da - db + 1)
    inv = 1 / b.lc()
    bc = b.coeffs
    for k in range(da - db, -1, -1):
        c = r[k + db] * inv
        if is_zero(c):
            continue
        q[k] = c
        for j in range(db + 1):
            r[k + j] = r[k + j] - c * bc[j]
    return Polynomial(q, a.var), Polynomial(r[:db], a.var)


_SAMPLE_POINTS = (2, 3, 5, 7, 11, -3, 13, 17)


def _has_function_coeffs(p: Polynomial) -> bool:
    return any(hasattr(c, "num") and hasattr(c, "den") for c in p.coeffs)


def _specialize(p: Polynomial, t0):
    """Substitute ``t0`` for the inner variable of rational-function coefficients."""
    out = []
    for c in p.coeffs:
        if hasattr(c, "num") and hasattr(c, "den"):
            d = c.den(t0)
            if d == 0:
                return None
            out.append(c.num(t0) / d)
        else:
            out.append(c)
    return Polynomial(out, p.var)


def _gcd_by_specialization(a: Polynomial, b: Polynomial):
    """Shortcut for coefficients in a rational function field Q(t).

    If ``a(t0)`` and ``b(t0)`` keep their degrees, their gcd over Q is divisible by
    the specialization of the true gcd.  A constant specialized gcd therefore
    proves coprimality.  When one input has rational coefficients the true gcd
    has rational coefficients too, and a candidate from two specializations is
    confirmed by exact division.  Returns None when neither shortcut applies.
    """
    specs = []
    for t0 in _SAMPLE_POINTS:
        sa, sb = _specialize(a, t0), _specialize(b, t0)
        if sa is None or sb is None or sa.degree() != a.degree() or sb.degree() != b.degree():
            continue
        g0 = poly_gcd(sa, sb)
        if g0.degree() == 0:
            return Polynomial((1,), a.var)
        specs.append(g0)
        if len(specs) == 2:
            break
    if len(specs) < 2:
        return None
    const_a, const_b = not _has_function_coeffs(a), not _has_function_coeffs(b)
    if not (const_a or const_b):
        return None
    cand = poly_gcd(specs[0], specs[1])
    if cand.degree() == 0:
        return Polynomial((1,), a.var)
    if poly_divmod(a, cand)[1].coeffs or poly_divmod(b, cand)[1].coeffs:
        return None
    return cand


def _rational_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    # sympy's dense gcd over QQ avoids the coefficient swell of naive Euclid
    fa = [QQ(c.numerator, c.denominator) for c in reversed(a.coeffs)]
    fb = [QQ(c.numerator, c.denominator) for c in reversed(b.coeffs)]
    g = dup_gcd(fa, fb, QQ)
    return Polynomial([Fraction(int(c.numerator), int(c.denominator)) for c in reversed(g)], a.var).monic()


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero only if both inputs are zero)."""
    if a.coeffs and b.coeffs and all(type(c) is Fraction for c in a.coeffs + b.coeffs):
        return _rational_gcd(a, b)
    if a.coeffs and b.coeffs and (_has_function_coeffs(a) or _has_function_coeffs(b)):
        g = _gcd_by_specialization(a, b)
        if g is not None:
            return g
    while b.coeffs:
        a, b = b, poly_divmod(a, b)[1]
        if b.coeffs:
            b = b.monic()
    return a.monic() if a.coeffs else a
