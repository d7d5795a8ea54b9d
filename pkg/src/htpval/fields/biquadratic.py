"""The biquadratic extension ``F(s1, s2)`` with ``s1**2 = d1`` and ``s2**2 = d2``.

The radicands are assumed to be independent nonsquares of the base field;
this is not checked (for the curve points built in :mod:`htpval.scene` the
radicands are ``f(A)`` and ``f(B)``, which are independent for a curve
without complex multiplication).  If the assumption fails, some nonzero
elements have zero norm and inversion raises :class:`DivisionByZero`.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DivisionByZero
from .base import TOWER_RANK, Status, rank, status


@dataclass(frozen=True, eq=False)
class BiquadraticTower:
    d1: object
    d2: object

    def __call__(self, c0, c1=0, c2=0, c3=0) -> BiquadraticElement:
        return BiquadraticElement(self, (c0, c1, c2, c3))

    def one(self) -> BiquadraticElement:
        return self(1)

    @property
    def s1(self) -> BiquadraticElement:
        return self(0, 1)

    @property
    def s2(self) -> BiquadraticElement:
        return self(0, 0, 1)


class BiquadraticElement:
    """``c0 + c1*s1 + c2*s2 + c3*s1*s2`` over a fixed tower."""

    __slots__ = ("tower", "coords")
    rank = TOWER_RANK

    def __init__(self, tower: BiquadraticTower, coords):
        self.tower = tower
        self.coords = tuple(coords)

    def _coerce(self, other):
        if isinstance(other, BiquadraticElement):
            if other.tower is not self.tower:
                raise ValueError("elements of different towers")
            return other
        if rank(other) >= TOWER_RANK:
            return NotImplemented
        return BiquadraticElement(self.tower, (other, 0, 0, 0))

    def zero_status(self) -> Status:
        ss = [status(c) for c in self.coords]
        if any(s is Status.NONZERO for s in ss):
            return Status.NONZERO
        if all(s is Status.ZERO for s in ss):
            return Status.ZERO
        return Status.UNKNOWN

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return BiquadraticElement(self.tower, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return BiquadraticElement(self.tower, [-a for a in self.coords])

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
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        d1, d2 = self.tower.d1, self.tower.d2
        if _all_zero(a1, a2, a3):
            return BiquadraticElement(self.tower, [a0 * b for b in other.coords])
        if _all_zero(b1, b2, b3):
            return BiquadraticElement(self.tower, [a * b0 for a in self.coords])
        c0 = a0 * b0 + d1 * (a1 * b1) + d2 * (a2 * b2) + (d1 * d2) * (a3 * b3)
        c1 = a0 * b1 + a1 * b0 + d2 * (a2 * b3 + a3 * b2)
        c2 = a0 * b2 + a2 * b0 + d1 * (a1 * b3 + a3 * b1)
        c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1
        return BiquadraticElement(self.tower, (c0, c1, c2, c3))

    __rmul__ = __mul__

    def conjugate(self, which: int) -> BiquadraticElement:
        """Apply sigma_1 (``s1 -> -s1``) or sigma_2 (``s2 -> -s2``)."""
        c0, c1, c2, c3 = self.coords
        if which == 1:
            return BiquadraticElement(self.tower, (c0, -c1, c2, -c3))
        if which == 2:
            return BiquadraticElement(self.tower, (c0, c1, -c2, -c3))
        raise ValueError("which must be 1 or 2")

    def _partner(self) -> BiquadraticElement:
        return self.conjugate(1) * self.conjugate(2) * self.conjugate(1).conjugate(2)

    def norm(self):
        """Norm down to the base field: the product of the four conjugates."""
        return (self * self._partner()).coords[0]

    def inverse(self) -> BiquadraticElement:
        a0, a1, a2, a3 = self.coords
        if _all_zero(a1, a2, a3):
            if status(a0) is Status.ZERO:
                raise DivisionByZero("inverse of zero in the tower")
            return BiquadraticElement(self.tower, (1 / a0, 0, 0, 0))
        partner = self._partner()
        n = (self * partner).coords[0]
        if status(n) is Status.ZERO:
            raise DivisionByZero("element has zero norm; radicands are not independent nonsquares")
        inv = 1 / n
        return BiquadraticElement(self.tower, [c * inv for c in partner.coords])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        o1, o2, o3 = other.coords[1:]
        if _all_zero(o1, o2, o3):
            if status(other.coords[0]) is Status.ZERO:
                raise DivisionByZero("division by zero in the tower")
            inv = 1 / other.coords[0]
            return BiquadraticElement(self.tower, [c * inv for c in self.coords])
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return all(a == b for a, b in zip(self.coords, other.coords))

    __hash__ = None

    def in_base(self) -> bool:
        return _all_zero(*self.coords[1:])

    def __repr__(self):
        names = ("", "s1", "s2", "s1*s2")
        parts = [
            f"({c!r})" + ("*" + n if n else "")
            for c, n in zip(self.coords, names)
            if status(c) is not Status.ZERO
        ]
        return " + ".join(parts) if parts else "0"


def _all_zero(*xs) -> bool:
    return all(status(x) is Status.ZERO for x in xs)


def tower_conjugate(x: BiquadraticElement, which: int) -> BiquadraticElement:
    return x.conjugate(which)
