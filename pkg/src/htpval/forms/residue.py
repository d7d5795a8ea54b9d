"""Residue forms of a diagonal form under a discrete valuation, and lifting of
residue witnesses over a complete (hence henselian) series field."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DegenerateWitness, InsufficientPrecision, UnsupportedValueGroup, ZeroResidue
from ..fields import Polynomial, TruncatedLaurent, hensel_lift_root
from ..fields.base import Status, status
from ..fields.laurent import INF
from ..valuations import TAdicValuation, is_odd
from .diagonal import DiagonalForm, IsotropyVerdict


def _int_value(valuation, x) -> int:
    try:
        v = valuation.value(x)
    except InsufficientPrecision as exc:
        raise ZeroResidue(f"cannot certify the value of {x!r}") from exc
    if v.is_infinite:
        raise ZeroResidue("a diagonal entry is zero")
    return v.components[0]


def _unit_residue(valuation, x):
    try:
        r = valuation.residue(x)
    except InsufficientPrecision as exc:
        raise ZeroResidue(f"residue of {x!r} is beyond precision") from exc
    if r == 0:
        raise ZeroResidue(f"{x!r} does not reduce to a unit")
    return r


def residue_split(q: DiagonalForm, t, valuation=None):
    """Split ``q`` into residue forms ``(Q1res, Q2res)``.

    With ``u`` the uniformizer, an entry of value ``2k`` contributes the residue
    of ``a * u^(-2k)`` to ``Q1res``; an entry of odd value ``v`` contributes the
    residue of ``a * t^(-1) * u^(-(v - v(t)))`` to ``Q2res``.  Both rescalings
    are by squares (up to the common factor ``t``), so ``q`` is isotropic only
    if one of the residue forms is, over a henselian base.
    """
    valuation = TAdicValuation() if valuation is None else valuation
    if getattr(valuation, "rank", None) != 1 or not hasattr(valuation, "uniformizer"):
        raise UnsupportedValueGroup("residue forms need a rank-one discrete valuation")
    vt = _int_value(valuation, t)
    if not is_odd(vt):
        raise ValueError(f"t has even value {vt}")
    u = valuation.uniformizer
    first, second = [], []
    for a in q.entries:
        v = _int_value(valuation, a)
        if v % 2 == 0:
            first.append(_unit_residue(valuation, a * u ** (-v)))
        else:
            second.append(_unit_residue(valuation, a / t * u ** (-(v - vt))))
    q1 = DiagonalForm(first) if first else None
    q2 = DiagonalForm(second) if second else None
    return q1, q2


def _as_series(a, var="T"):
    if isinstance(a, TruncatedLaurent):
        return a
    return TruncatedLaurent((a,), 0, INF, var)


def hensel_isotropy_lift(witness, q: DiagonalForm, target_prec: int) -> IsotropyVerdict:
    """Lift a residue witness of ``q`` over Q((T)) to a zero of ``q`` modulo ``T^target_prec``.

    ``witness`` has one rational coordinate per entry.  Let ``mu`` be the least
    value of an entry on the support of the witness; the witness must zero the
    leading ``T^mu`` part of ``q``, and some coordinate at that level must be
    nonzero so that it is a simple root in its own variable.  All other
    coordinates are kept fixed.
    """
    if len(witness) != q.dim:
        raise ValueError(f"witness has {len(witness)} coordinates, form has {q.dim}")
    w = [Fraction(x) for x in witness]
    entries = [_as_series(a) for a in q.entries]
    support = [i for i, x in enumerate(w) if x != 0]
    if not support:
        raise DegenerateWitness("the zero vector is not a witness")
    values = {i: entries[i].valuation() for i in support}
    mu = min(values.values())
    level = [i for i in support if values[i] == mu]
    lead = sum(entries[i].coefficient(mu) * w[i] ** 2 for i in level)
    if lead != 0:
        raise DegenerateWitness(f"witness does not zero the T^{mu} part of the form (value {lead})")
    pivot = level[0]
    rest = 0
    for i in support:
        if i != pivot:
            rest = rest + entries[i] * (w[i] * w[i])
    rel = target_prec - mu
    c2 = entries[pivot].shift(-mu)
    c0 = _as_series(rest).shift(-mu)
    P = Polynomial([c0, 0, c2], "X")
    root = hensel_lift_root(P, w[pivot], max(rel, 1), "T")
    lifted = list(w)
    lifted[pivot] = root
    lifted = tuple(x if i == pivot else TruncatedLaurent((x,), 0, INF, "T") for i, x in enumerate(lifted))
    residual = q.evaluate(lifted)
    prec = _residual_order(residual)
    return IsotropyVerdict(True, lifted, precision=prec, note=f"coordinate {pivot} lifted")


def _residual_order(r):
    r = _as_series(r)
    if r.zero_status() is Status.ZERO:
        return INF
    if status(r) is Status.NONZERO:
        return r.val
    return r.prec
