"""Valuations with lexicographically ordered value groups ``Z^k``.

Every valuation descriptor exposes ``value(x)`` and ``residue(x)``.  Three
concrete kinds are provided: the T-adic valuation on truncated Laurent series,
the order at a point of the projective line on rational functions, and the
lexicographic monomial valuation on multivariate rational functions.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InfinityInput, NegativeValue
from .fields import INFINITY, Polynomial, RationalFunction, TruncatedLaurent, order_at, value_at_infinity
from .fields.base import is_zero, lift


@functools.total_ordering
class LexValue:
    """An element of ``Z^k`` ordered lexicographically, or the value infinity."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = None if components is None else tuple(int(c) for c in components)
        if self.components is not None and not self.components:
            raise ValueError("a value needs at least one component")

    @classmethod
    def infinity(cls) -> LexValue:
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.components is None

    def __len__(self):
        if self.components is None:
            raise InfinityInput("infinity has no length")
        return len(self.components)

    def __add__(self, other):
        other = _as_lex(other)
        if self.is_infinite or other.is_infinite:
            return LexValue.infinity()
        _same_rank(self, other)
        return LexValue(a + b for a, b in zip(self.components, other.components))

    __radd__ = __add__

    def __neg__(self):
        if self.is_infinite:
            raise InfinityInput("cannot negate infinity")
        return LexValue(-a for a in self.components)

    def __sub__(self, other):
        return self + (-_as_lex(other))

    def __mul__(self, k: int):
        if self.is_infinite:
            return self
        return LexValue(k * a for a in self.components)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _as_lex(other)
        except TypeError:
            return NotImplemented
        return self.components == other.components

    def __lt__(self, other):
        other = _as_lex(other)
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        _same_rank(self, other)
        return self.components < other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        if self.is_infinite:
            return "inf"
        return "(" + ",".join(str(a) for a in self.components) + ")"


def _as_lex(x) -> LexValue:
    if isinstance(x, LexValue):
        return x
    if isinstance(x, int):
        return LexValue((x,))
    if isinstance(x, tuple):
        return LexValue(x)
    raise TypeError(f"cannot read {x!r} as a value")


def _same_rank(a: LexValue, b: LexValue):
    if len(a.components) != len(b.components):
        raise ValueError("values live in groups of different rank")


def is_odd(g) -> bool:
    """True iff ``g`` is not twice an element of ``Z^k``."""
    g = _as_lex(g)
    if g.is_infinite:
        raise InfinityInput("parity of infinity is undefined")
    return any(a % 2 for a in g.components)


def compose_project(w_value, k1: int, k2: int):
    """Split a value of a composed valuation into ``(u_part, v_part)``.

    The leading ``k1`` coordinates are the image in the value group of the
    coarse valuation ``v``; the trailing ``k2`` coordinates are the kernel, the
    value group of the residue valuation ``u``.
    """
    w_value = _as_lex(w_value)
    if w_value.is_infinite:
        raise InfinityInput("cannot project infinity")
    if len(w_value) != k1 + k2 or k1 < 1 or k2 < 1:
        raise ValueError(f"value of rank {len(w_value)} does not split as {k1}+{k2}")
    c = w_value.components
    return LexValue(c[k1:]), LexValue(c[:k1])


# --- sparse multivariate rational functions ---------------------------------


def _clean(terms: dict) -> dict:
    return {e: c for e, c in terms.items() if c != 0}


class MultivariatePoly:
    """Sparse polynomial over Q: exponent tuple -> coefficient."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: dict, nvars: int):
        self.nvars = nvars
        self.terms = _clean({tuple(e): Fraction(c) for e, c in terms.items()})
        for e in self.terms:
            if len(e) != nvars or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e}")

    @classmethod
    def constant(cls, c, nvars: int) -> MultivariatePoly:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exps, coeff=1) -> MultivariatePoly:
        return cls({tuple(exps): coeff}, len(exps))

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, MultivariatePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultivariatePoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultivariatePoly(out, self.nvars)

    def __neg__(self):
        return MultivariatePoly({e: -c for e, c in self.terms.items()}, self.nvars)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultivariatePoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers live in MultivariateRatio")
        out = MultivariatePoly.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def lex_min(self):
        """Lexicographically smallest exponent vector and its coefficient."""
        e = min(self.terms)
        return e, self.terms[e]

    def __eq__(self, other):
        return isinstance(other, MultivariatePoly) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*x^{e}" for e, c in sorted(self.terms.items()))


class MultivariateRatio:
    """A fraction of sparse polynomials; not reduced (values do not need it)."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultivariatePoly, den: MultivariatePoly | None = None):
        if den is None:
            den = MultivariatePoly.constant(1, num.nvars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def __add__(self, other):
        return MultivariateRatio(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return MultivariateRatio(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        return MultivariateRatio(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero ratio")
        return MultivariateRatio(self.num * other.den, self.den * other.num)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __repr__(self):
        return f"({self.num!r})/({self.den!r})"


# --- valuation descriptors --------------------------------------------------


@dataclass(frozen=True)
class MonomialValuation:
    """Lexicographic monomial valuation with the variables ranked by ``variable_order``."""

    variable_order: tuple

    @property
    def rank(self) -> int:
        return len(self.variable_order)

    def value(self, x) -> LexValue:
        if isinstance(x, MultivariatePoly):
            x = MultivariateRatio(x)
        if x.is_zero():
            return LexValue.infinity()
        return LexValue(x.num.lex_min()[0]) - LexValue(x.den.lex_min()[0])

    def residue(self, x):
        if isinstance(x, MultivariatePoly):
            x = MultivariateRatio(x)
        if x.is_zero():
            return Fraction(0)
        v = self.value(x)
        zero = LexValue((0,) * self.rank)
        if v < zero:
            raise NegativeValue(f"value {v} is negative")
        if v > zero:
            return Fraction(0)
        return x.num.lex_min()[1] / x.den.lex_min()[1]


def monomial_value(v: MonomialValuation, x) -> LexValue:
    return v.value(x)


@dataclass(frozen=True)
class TAdicValuation:
    """The ``var``-adic valuation on truncated Laurent series."""

    var: str = "T"
    rank = 1

    @property
    def uniformizer(self) -> TruncatedLaurent:
        return TruncatedLaurent.gen(self.var)

    def value(self, x) -> LexValue:
        x = _as_series(x, self.var)
        v = x.valuation()
        return LexValue.infinity() if v == float("inf") else LexValue((v,))

    def residue(self, x):
        return _as_series(x, self.var).residue()


def _as_series(x, var):
    if isinstance(x, TruncatedLaurent):
        return x
    return TruncatedLaurent((lift(x),), 0, float("inf"), var)


@dataclass(frozen=True)
class PointValuation:
    """Order of vanishing at ``Z = point`` (a rational or :data:`INFINITY`)."""

    point: object
    var: str = "Z"
    rank = 1

    @property
    def uniformizer(self) -> RationalFunction:
        Z = RationalFunction.gen(self.var)
        if self.point is INFINITY:
            return 1 / Z
        return Z - self.point

    def _coerce(self, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Polynomial):
            return RationalFunction(x)
        return RationalFunction(Polynomial((x,), self.var))

    def value(self, x) -> LexValue:
        x = self._coerce(x)
        if is_zero(x):
            return LexValue.infinity()
        return LexValue((order_at(x, self.point),))

    def residue(self, x):
        x = self._coerce(x)
        if is_zero(x):
            return Fraction(0)
        if order_at(x, self.point) < 0:
            raise NegativeValue(f"{x!r} has a pole at {self.point!r}")
        if self.point is INFINITY:
            return value_at_infinity(x)
        return x(self.point)


def residue(v, x):
    """Image of ``x`` in the residue field of ``v``."""
    return v.residue(x)
