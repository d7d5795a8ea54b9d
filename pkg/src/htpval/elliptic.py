"""Weierstrass curves ``y^2 = x^3 + a2 x^2 + a4 x + a6`` over any supported field,
the quadratic twist ``f(Z) Y^2 = f(X)`` over Q(Z), and the behaviour of the
multiples ``n*(Z, 1)`` at the place ``Z = infinity``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt

from .errors import DivisionByZero, PointNotOnCurve, PoleAtPoint, SingularCurve, ZeroMultiple
from .fields import INFINITY, Polynomial, RationalFunction, order_at, value_at_infinity
from .fields.base import Status, is_zero, rational_sqrt, status, to_fraction


class _PointAtInfinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "O"


O = _PointAtInfinity()


@dataclass(frozen=True, eq=False)
class CurvePoint:
    """An affine point; the point at infinity is the singleton :data:`O`."""

    x: object
    y: object

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    __hash__ = None

    def __iter__(self):
        return iter((self.x, self.y))


@dataclass(frozen=True)
class WeierstrassCurve:
    a2: object = 0
    a4: object = 0
    a6: object = 0

    def f(self, x):
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def f_prime(self, x):
        return (3 * x + 2 * self.a2) * x + self.a4

    def cubic(self, var: str = "X") -> Polynomial:
        return Polynomial((self.a6, self.a4, self.a2, 1), var)

    def discriminant(self):
        """Discriminant of the cubic ``x^3 + a2 x^2 + a4 x + a6``."""
        b, c, d = self.a2, self.a4, self.a6
        return b * b * c * c - 4 * c**3 - 4 * b**3 * d - 27 * d * d + 18 * b * c * d

    def is_nonsingular(self) -> bool:
        return status(self.discriminant()) is Status.NONZERO

    def contains(self, P) -> bool:
        if P is O:
            return True
        return status(P.y * P.y - self.f(P.x)) is not Status.NONZERO

    def check(self, P):
        if not self.contains(P):
            raise PointNotOnCurve(f"{P!r} is not on {self!r}")

    @classmethod
    def parse(cls, text: str) -> WeierstrassCurve:
        """Parse ``"a2,a4,a6"`` with rational entries written as ``p/q``."""
        parts = [p for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"curve text needs three coefficients, got {text!r}")
        return cls(*(to_fraction(p) for p in parts))

    def serialize(self) -> str:
        return ",".join(str(Fraction(a)) for a in (self.a2, self.a4, self.a6))


DEFAULT_CURVE = WeierstrassCurve(Fraction(0), Fraction(1), Fraction(1))


def negate(P):
    if P is O:
        return O
    return CurvePoint(P.x, -P.y)


def ec_add(curve: WeierstrassCurve, P, Q, check: bool = True):
    """Group law with :data:`O` as identity."""
    if check:
        curve.check(P)
        curve.check(Q)
    if P is O:
        return Q
    if Q is O:
        return P
    dx = Q.x - P.x
    # for truncated series "equal to precision" counts as equal
    if status(dx) is not Status.NONZERO:
        if status(Q.y + P.y) is not Status.NONZERO:
            return O
        slope = curve.f_prime(P.x) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / dx
    x3 = slope * slope - curve.a2 - P.x - Q.x
    y3 = slope * (P.x - x3) - P.y
    return CurvePoint(x3, y3)


def scalar_mul(curve: WeierstrassCurve, n: int, P, check: bool = True):
    """Double-and-add; negative ``n`` negates."""
    if check:
        curve.check(P)
    if n < 0:
        return scalar_mul(curve, -n, negate(P), check=False)
    result = O
    addend = P
    while n:
        if n & 1:
            result = ec_add(curve, result, addend, check=False)
        n >>= 1
        if n:
            addend = ec_add(curve, addend, addend, check=False)
    return result


def _divisors(n: int):
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p: Polynomial):
    """Rational roots of a polynomial over Q by the rational root test."""
    from math import lcm

    coeffs = [Fraction(c) for c in p.coeffs]
    k = 0
    while k < len(coeffs) and coeffs[k] == 0:
        k += 1
    roots = {Fraction(0)} if k else set()
    coeffs = coeffs[k:]
    if len(coeffs) <= 1:
        return sorted(roots)
    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    for q in _divisors(ints[-1]):
        for r in _divisors(ints[0]):
            for cand in (Fraction(r, q), Fraction(-r, q)):
                if p(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def two_torsion(curve: WeierstrassCurve):
    """Rational points of order dividing 2 (the identity included)."""
    return [O] + [CurvePoint(r, Fraction(0)) for r in rational_roots(curve.cubic())]


def rational_points(curve: WeierstrassCurve, height: int):
    """Affine rational points with ``x = p/q``, ``|p|, q <= height`` (fixture search)."""
    found = []
    seen = set()
    for q, p in product(range(1, height + 1), range(-height, height + 1)):
        x = Fraction(p, q)
        if x in seen:
            continue
        seen.add(x)
        y = rational_sqrt(curve.f(x))
        if y is None:
            continue
        found.append(CurvePoint(x, y))
        if y:
            found.append(CurvePoint(x, -y))
    return found


# --- the quadratic twist by f(Z) -------------------------------------------


@dataclass(frozen=True)
class TwistData:
    """``d Y^2 = f(X)`` presented as the Weierstrass curve ``y^2 = x^3 + a2 d x^2 + a4 d^2 x + a6 d^3``
    through ``(X, Y) -> (d X, d^2 Y)``."""

    base: WeierstrassCurve
    d: object

    @property
    def model(self) -> WeierstrassCurve:
        d = self.d
        return WeierstrassCurve(self.base.a2 * d, self.base.a4 * d * d, self.base.a6 * d * d * d)

    def to_model(self, X, Y):
        return CurvePoint(self.d * X, self.d * self.d * Y)

    def from_model(self, P):
        return self.d_inv * P.x, self.d_inv * self.d_inv * P.y

    @property
    def d_inv(self):
        return 1 / self.d


def _check_base(curve: WeierstrassCurve):
    if not curve.is_nonsingular():
        raise SingularCurve(f"{curve!r} has a singular cubic")


@functools.lru_cache(maxsize=None)
def twist_multiples(curve: WeierstrassCurve, n: int):
    """``(X_n, Y_n)`` with ``n*(Z, 1) = (X_n, Y_n)`` on ``f(Z) Y^2 = f(X)`` over Q(Z)."""
    if n == 0:
        raise ZeroMultiple("0*(Z,1) is the point at infinity")
    _check_base(curve)
    Z = RationalFunction.gen("Z")
    if n < 0:
        X, Y = twist_multiples(curve, -n)
        return X, -Y
    if n == 1:
        return Z, RationalFunction(Polynomial((1,), "Z"))
    twist = TwistData(curve, curve.f(Z))
    P = scalar_mul(twist.model, n, twist.to_model(Z, 1), check=False)
    return twist.from_model(P)


def twist_identity_holds(curve: WeierstrassCurve, n: int) -> bool:
    """``f(Z) Y_n^2 == f(X_n)`` as rational functions."""
    X, Y = twist_multiples(curve, n)
    Z = RationalFunction.gen("Z")
    return curve.f(Z) * Y * Y == curve.f(X)


def _order_or_inf(f):
    if is_zero(f):
        return float("inf")
    return order_at(f, INFINITY)


@dataclass
class CheckResult:
    description: str
    expected: object
    actual: object
    passed: bool


@dataclass
class AsymptoticsReport:
    n: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def asymptotics_check(curve: WeierstrassCurve, n: int) -> AsymptoticsReport:
    """``X_n = Z/n^2 + O(1)`` and ``Y_n = 1/n^3 + O(1/Z)`` at infinity, checked exactly."""
    X, Y = twist_multiples(curve, n)
    Z = RationalFunction.gen("Z")
    ox = _order_or_inf(X - Z * Fraction(1, n * n))
    oy = _order_or_inf(Y - Fraction(1, n**3))
    report = AsymptoticsReport(n)
    report.checks.append(CheckResult(f"ord_inf(X_{n} - Z/{n * n}) >= 0", ">= 0", ox, ox >= 0))
    report.checks.append(CheckResult(f"ord_inf(Y_{n} - 1/{n**3}) >= 1", ">= 1", oy, oy >= 1))
    return report


def cusp_ratio(curve: WeierstrassCurve, n: int) -> RationalFunction:
    """``X'_n / Y'_n`` where ``X' = Z^2 X / f(Z)`` and ``Y' = Z^3 Y / f(Z)``."""
    X, Y = twist_multiples(curve, n)
    Z = RationalFunction.gen("Z")
    fz = curve.f(Z)
    return (Z * Z * X / fz) / (Z * Z * Z * Y / fz)


def cusp_reduction_check(curve: WeierstrassCurve, n: int) -> CheckResult:
    """The reduction of ``n*P'_1`` on the cusp has parameter ``X'/Y' = n``."""
    ratio = cusp_ratio(curve, n)
    o = order_at(ratio, INFINITY)
    if o < 0:
        return CheckResult(f"residue of X'_{n}/Y'_{n} at infinity", n, "pole", False)
    r = value_at_infinity(ratio)
    return CheckResult(f"residue of X'_{n}/Y'_{n} at infinity", n, r, r == n)


def twist_action(XY, P, curve: WeierstrassCurve = DEFAULT_CURVE):
    """Act on ``P in E(Q)`` by a twist point ``(X, Y)``: ``(x, y) -> (X(x), Y(x) y)``."""
    X, Y = XY
    if P is O:
        raise PoleAtPoint("the action is defined on affine points")
    curve.check(P)
    try:
        x = X(P.x)
        y = Y(P.x) * P.y
    except DivisionByZero as exc:
        raise PoleAtPoint(str(exc)) from exc
    Q = CurvePoint(Fraction(x), Fraction(y))
    curve.check(Q)
    return Q
