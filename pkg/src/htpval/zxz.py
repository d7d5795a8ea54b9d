"""Z x Z with a divisibility relation, and the existential encoding of integer
multiplication through it.

``d1 | d2`` means ``d2 = r * d1`` for some integer ``r``.  On left arguments
``(a, 1)`` this reads ``(c, d) = (a*d, d)``.  The product ``a*b = c`` is encoded
by the existence of ``X`` with

    (1, 1) | X,    (-1, 1) | X - 2(b, 0),    (2a + 1, 1) | X + 2(c, 0).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np


class ZxZ(NamedTuple):
    a: int
    b: int

    def __add__(self, other):
        return ZxZ(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return ZxZ(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return ZxZ(-self.a, -self.b)

    def scale(self, r: int) -> ZxZ:
        return ZxZ(r * self.a, r * self.b)


def embed(n: int) -> ZxZ:
    """Integers sit in Z x Z as ``(n, 0)``; addition is preserved."""
    return ZxZ(n, 0)


def mid(d1, d2) -> bool:
    d1, d2 = ZxZ(*d1), ZxZ(*d2)
    if d1 == (0, 0):
        return d2 == (0, 0)
    # the multiplier is forced by a nonzero component of d1
    if d1.a:
        if d2.a % d1.a:
            return False
        r = d2.a // d1.a
    else:
        if d2.b % d1.b:
            return False
        r = d2.b // d1.b
    return d1.scale(r) == d2


def relations(a: int, b: int, c: int):
    """The three (divisor, dividend-offset) templates: ``divisor | X + offset``."""
    return (
        (ZxZ(1, 1), ZxZ(0, 0)),
        (ZxZ(-1, 1), ZxZ(-2 * b, 0)),
        (ZxZ(2 * a + 1, 1), ZxZ(2 * c, 0)),
    )


def relations_hold(a: int, b: int, c: int, X) -> bool:
    X = ZxZ(*X)
    return all(mid(d, X + off) for d, off in relations(a, b, c))


@dataclass(frozen=True)
class MulInstance:
    a: int
    b: int
    c: int
    witness: ZxZ | None = None

    @property
    def holds(self) -> bool:
        return self.witness is not None


def mul_holds(a: int, b: int, c: int) -> MulInstance:
    """Decide the encoding by the forced deduction.

    ``(1,1) | X`` gives ``X = (x, x)``; ``(-1,1) | (x - 2b, x)`` gives ``x = b``;
    then ``(2a+1, 1) | (b + 2c, b)`` says ``b + 2c = (2a+1) b``, i.e. ``c = a b``.
    """
    X = ZxZ(b, b)
    if relations_hold(a, b, c, X):
        return MulInstance(a, b, c, X)
    return MulInstance(a, b, c, None)


@dataclass
class EncodingReport:
    n_range: int
    box: int
    triples: int = 0
    discrepancies: list = field(default_factory=list)
    spurious: int = 0
    non_diagonal_witnesses: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.discrepancies and not self.spurious and not self.non_diagonal_witnesses


def _mid_mask(d, U, V):
    """Vectorised ``mid(d, (U, V))`` over integer arrays."""
    p, q = d
    if p == 0 and q == 0:
        return (U == 0) & (V == 0)
    if p:
        ok = U % p == 0
        r = U // p
    else:
        ok = V % q == 0
        r = V // q
    return ok & (r * p == U) & (r * q == V)


def brute_force_witnesses(a: int, b: int, c: int, box: int):
    """All ``X`` with ``|x1|, |x2| <= box`` satisfying the three relations (exhaustive)."""
    xs = np.arange(-box, box + 1, dtype=np.int64)
    U, V = np.meshgrid(xs, xs, indexing="ij")
    mask = np.ones_like(U, dtype=bool)
    for d, off in relations(a, b, c):
        mask &= _mid_mask(d, U + off.a, V + off.b)
    return [ZxZ(int(u), int(v)) for u, v in zip(U[mask], V[mask])]


def verify_encoding(n_range: int, box: int | None = None) -> EncodingReport:
    """Compare the deduction, the truth ``c == a b`` and a brute-force search over the box."""
    if n_range < 1:
        raise ValueError("range must be positive")
    box = 3 * n_range + 5 if box is None else box
    if box < 1:
        raise ValueError("box must be positive")
    start = time.perf_counter()
    report = EncodingReport(n_range, box)
    xs = np.arange(-box, box + 1, dtype=np.int64)
    U, V = np.meshgrid(xs, xs, indexing="ij")
    first = _mid_mask((1, 1), U, V)
    vals = range(-n_range, n_range + 1)
    for b in vals:
        base = first & _mid_mask((-1, 1), U - 2 * b, V)
        cand_u, cand_v = U[base], V[base]
        for a in vals:
            for c in vals:
                report.triples += 1
                hit = _mid_mask((2 * a + 1, 1), cand_u + 2 * c, cand_v)
                found = [ZxZ(int(u), int(v)) for u, v in zip(cand_u[hit], cand_v[hit])]
                truth = a * b == c
                inst = mul_holds(a, b, c)
                if inst.holds != truth or bool(found) != truth:
                    report.discrepancies.append(
                        {"a": a, "b": b, "c": c, "truth": truth, "deduced": inst.holds, "brute_force": found}
                    )
                if found and not truth:
                    report.spurious += 1
                if found and found != [ZxZ(b, b)]:
                    report.non_diagonal_witnesses += 1
    report.elapsed = time.perf_counter() - start
    return report
