"""Newton-Hensel lifting of simple residue roots in truncated series rings."""

from __future__ import annotations

from fractions import Fraction

from ..errors import (
    InsufficientPrecision,
    NonSquareResidue,
    NotARoot,
    NotSimpleRoot,
    OddLeadingExponent,
)
from .base import Status, rational_sqrt, status
from .laurent import INF, TruncatedLaurent
from .polynomial import Polynomial


def _series_var(P: Polynomial, default: str) -> str:
    for c in P.coeffs:
        if isinstance(c, TruncatedLaurent):
            return c.var
    return default


def _residue(c):
    if isinstance(c, TruncatedLaurent):
        return c.residue()
    return c


def hensel_lift_root(P: Polynomial, alpha, target_prec: int, var: str | None = None) -> TruncatedLaurent:
    """Lift a simple root ``alpha`` of ``P mod m`` to a root of ``P`` modulo ``var**target_prec``.

    ``P`` has coefficients in the valuation ring (series of nonnegative
    valuation, or constants).  Newton's iteration doubles the number of
    correct digits per step.  The result is exact when an iterate happens to
    be an exact root.
    """
    var = _series_var(P, "T") if var is None else var
    for c in P.coeffs:
        if isinstance(c, TruncatedLaurent) and c.coeffs and c.val < 0:
            raise ValueError("polynomial coefficients must lie in the valuation ring")
    reduced = Polynomial([_residue(c) for c in P.coeffs], "X")
    if status(reduced(alpha)) is Status.NONZERO:
        raise NotARoot(f"{alpha!r} is not a root of the reduced polynomial")
    if status(reduced.derivative()(alpha)) is not Status.NONZERO:
        raise NotSimpleRoot(f"{alpha!r} is not a simple root of the reduced polynomial")

    dP = P.derivative()
    beta = TruncatedLaurent((alpha,), 0, INF, var)
    known = 1
    while True:
        value = P(beta)
        if not isinstance(value, TruncatedLaurent):
            value = TruncatedLaurent((value,), 0, INF, var)
        if value.zero_status() is Status.ZERO:
            return beta
        if known >= target_prec:
            return beta.add_bigoh(target_prec)
        k = min(2 * known, target_prec)
        delta = value.add_bigoh(k) / dP(beta)
        stepped = beta - delta
        reached = min(k, stepped.prec)
        if reached <= known:
            raise InsufficientPrecision(
                f"coefficients only support {var}^{known}, asked for {var}^{target_prec}"
            )
        known = reached
        beta = stepped.as_exact()


def _coefficient_sqrt(c):
    if isinstance(c, TruncatedLaurent):
        return sqrt_lift(c, 1)
    r = rational_sqrt(Fraction(c))
    if r is None:
        raise NonSquareResidue(f"{c} is not a square in the residue field")
    return r


def sqrt_lift(u: TruncatedLaurent, sign: int = 1, target_prec=None) -> TruncatedLaurent:
    """Square root of a series whose leading term is a square.

    ``sign`` selects which of the two residue roots the result reduces to.
    ``target_prec`` is an absolute precision; by default the full precision of
    ``u`` is used.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not u.coeffs and u.prec == INF:
        return u
    v = u.valuation()
    if v % 2:
        raise OddLeadingExponent(f"leading exponent {v} is odd")
    half = v // 2
    root0 = sign * _coefficient_sqrt(u.coeffs[0])
    unit = u.shift(-v)
    if unit.prec == INF and len(unit.coeffs) == 1:
        return TruncatedLaurent((root0,), half, INF, u.var)
    rel = unit.prec if target_prec is None else min(unit.prec, target_prec - half)
    if rel == INF:
        raise InsufficientPrecision("exact non-monomial square root needs a target precision")
    unit = unit.add_bigoh(rel)
    P = Polynomial([-unit, 0, 1], "X")
    return hensel_lift_root(P, root0, rel, u.var).shift(half)
