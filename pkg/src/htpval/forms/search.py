"""Bounded witness search for diagonal forms.

Supported base fields and the candidate coordinates tried at height ``H``:

* Q: integers ``0..H`` (signs are irrelevant for squares);
* Q((T)) with exact Laurent-polynomial entries: ``c * T^k`` with ``c`` in ``0..H``, ``k`` in ``{0, 1}``;
* Q(Z): polynomials ``p0 + p1*Z`` with ``|p0|, |p1| <= H``.

Each coordinate contributes an integer coefficient vector to the value of the
form.  The search is a meet-in-the-middle over the two halves of the
coordinates; vectors are compared through a linear hash modulo ``2**64`` and
every hash hit is re-checked exactly before it is reported.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import lcm

import numpy as np

from ..fields import Polynomial, RationalFunction, TruncatedLaurent
from ..fields.laurent import INF
from .diagonal import DiagonalForm, IsotropyVerdict

MAX_HALF = 4_000_000
_MASK = (1 << 64) - 1


def _weight(e: int) -> int:
    # splitmix64 of the exponent: fixed, well-mixed weights
    z = (e * 0x9E3779B97F4A7C15 + 0x632BE59BD9B4E8C5) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def _hash(vec: dict) -> int:
    return sum(_weight(e) * c for e, c in vec.items()) & _MASK


def _kind(q: DiagonalForm) -> str:
    if all(isinstance(a, (int, Fraction)) for a in q.entries):
        return "Q"
    if any(isinstance(a, TruncatedLaurent) for a in q.entries):
        for a in q.entries:
            if isinstance(a, TruncatedLaurent) and a.prec != INF:
                raise ValueError("witness search needs exact Laurent-polynomial entries")
        return "QT"
    if any(isinstance(a, (RationalFunction, Polynomial)) for a in q.entries):
        return "QZ"
    raise TypeError("unsupported base field for witness search")


def _integral_entries(q: DiagonalForm, kind: str) -> list:
    """Entries as ``{exponent: int}`` maps, all scaled by one common nonzero constant."""
    if kind == "Q":
        raw = [{0: Fraction(a)} for a in q.entries]
    elif kind == "QT":
        raw = []
        for a in q.entries:
            if not isinstance(a, TruncatedLaurent):
                a = TruncatedLaurent((a,), 0, INF, "T")
            raw.append({a.val + i: Fraction(c) for i, c in enumerate(a.coeffs) if c})
    else:
        fns = [a if isinstance(a, RationalFunction) else RationalFunction(a) for a in q.entries]
        den = Polynomial((1,), "Z")
        for f in fns:
            den = den * f.den
        raw = []
        for f in fns:
            p = (f * RationalFunction(den)).num
            raw.append({i: Fraction(c) for i, c in enumerate(p.coeffs) if c})
    scale = lcm(*(c.denominator for m in raw for c in m.values()))
    return [{e: int(c * scale) for e, c in m.items()} for m in raw]


def _candidates(kind: str, height: int):
    """Coordinate candidates as (exact value, square as {exponent: int}); index 0 is zero."""
    zero = (Fraction(0), {})
    if kind == "Q":
        return [zero] + [(Fraction(c), {0: c * c}) for c in range(1, height + 1)]
    if kind == "QT":
        out = [zero]
        for c in range(1, height + 1):
            for k in (0, 1):
                out.append((TruncatedLaurent.monomial(c, k), {2 * k: c * c}))
        return out
    out = [zero]
    for p0, p1 in product(range(-height, height + 1), repeat=2):
        if (p0, p1) == (0, 0):
            continue
        sq = {0: p0 * p0, 1: 2 * p0 * p1, 2: p1 * p1}
        out.append((RationalFunction(Polynomial((p0, p1), "Z")), {e: c for e, c in sq.items() if c}))
    return out


def _contribution(entry: dict, square: dict) -> dict:
    out = {}
    for e1, c1 in entry.items():
        for e2, c2 in square.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return out


def _half_hashes(columns):
    """Hashes of every combination of one candidate per column (row-major, last column fastest)."""
    acc = np.zeros(1, dtype=np.uint64)
    for col in columns:
        acc = (acc[:, None] + col[None, :]).ravel()
    return acc


def _unravel(index: int, sizes):
    out = []
    for s in reversed(sizes):
        out.append(index % s)
        index //= s
    return tuple(reversed(out))


def _exact_value(entries, squares, idx):
    total = {}
    for k, j in enumerate(idx):
        for e, c in _contribution(entries[k], squares[j][1]).items():
            total[e] = total.get(e, 0) + c
    return {e: c for e, c in total.items() if c}


def witness_search(q: DiagonalForm, height_bound: int) -> IsotropyVerdict:
    """Look for a nonzero vector of height at most ``height_bound`` on which ``q`` vanishes.

    A negative result only means that no witness exists within the bound.
    """
    if height_bound < 1:
        raise ValueError("height bound must be at least 1")
    kind = _kind(q)
    entries = _integral_entries(q, kind)
    cands = _candidates(kind, height_bound)
    n = len(entries)
    size = len(cands)
    split = n // 2
    if size ** (n - split) > MAX_HALF:
        raise ValueError(f"search space too large: {size}^{n - split} candidates per half")
    columns = []
    for a in entries:
        hs = [_hash(_contribution(a, sq)) for _, sq in cands]
        columns.append(np.array(hs, dtype=np.uint64))
    left_sizes = [size] * split
    right_sizes = [size] * (n - split)
    left = _half_hashes(columns[:split])
    right = _half_hashes(columns[split:])
    neg_right = (np.uint64(0) - right).astype(np.uint64)

    def verified(li, ri):
        idx = _unravel(li, left_sizes) + _unravel(ri, right_sizes)
        if not any(idx):
            return None
        if _exact_value(entries, cands, idx):
            return None
        return tuple(cands[j][0] for j in idx)

    # witnesses supported on one half
    for li in np.flatnonzero(left == 0)[:64]:
        w = verified(int(li), 0)
        if w:
            return _found(q, w, height_bound)
    for ri in np.flatnonzero(right == 0)[:64]:
        w = verified(0, int(ri))
        if w:
            return _found(q, w, height_bound)
    if split:
        order = np.argsort(neg_right, kind="stable")
        sorted_r = neg_right[order]
        pos = np.searchsorted(sorted_r, left)
        pos_c = np.minimum(pos, len(sorted_r) - 1)
        hits = np.flatnonzero(sorted_r[pos_c] == left)
        for li in hits[:4096]:
            p = int(pos[li])
            while p < len(sorted_r) and sorted_r[p] == left[li]:
                w = verified(int(li), int(order[p]))
                if w:
                    return _found(q, w, height_bound)
                p += 1
    return IsotropyVerdict(False, None, decided=False, note=f"no witness of height <= {height_bound}")


def _found(q, w, height):
    if q.evaluate(w) != 0:
        raise ArithmeticError(f"hash match {w} does not zero the form")
    return IsotropyVerdict(True, w, note=f"witness of height <= {height}")


def escalating_search(q: DiagonalForm, max_height: int = 10**4) -> IsotropyVerdict:
    """Search at heights 1, 2, 4, ... up to ``max_height``, stopping at the first witness."""
    h = 1
    last = None
    while h <= max_height:
        try:
            last = witness_search(q, h)
        except ValueError:
            break
        if last.isotropic:
            return last
        h *= 2
    if last is None:
        return IsotropyVerdict(False, None, decided=False, note="search space too large")
    return last
