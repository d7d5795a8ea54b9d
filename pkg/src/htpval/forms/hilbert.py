"""Hilbert symbols over Q and the Hasse-Minkowski isotropy decision."""

from __future__ import annotations

from fractions import Fraction
from math import prod

from ..errors import FactorizationLimit
from ..fields.base import rational_sqrt
from .diagonal import DiagonalForm, IsotropyVerdict

TRIAL_BOUND = 10**6
REAL = "real"


def factor_int(n: int, bound: int = TRIAL_BOUND) -> dict:
    """Prime factorization of ``|n|`` by trial division up to ``bound``.

    A cofactor left after trial division is accepted as prime only when it is
    below ``bound**2``; otherwise the factorization is not certified.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 5
    step = 2
    while p * p <= n and p <= bound:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        if p * p <= n:
            raise FactorizationLimit(f"cofactor {n} has no factor below {bound}")
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(q) -> int:
    """The squarefree integer in the square class of a nonzero rational."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("0 has no square class")
    sign = -1 if q < 0 else 1
    core = 1
    for part in (q.numerator, q.denominator):
        for p, e in factor_int(part).items():
            if e % 2:
                core *= p
    return sign * core


def _split(a: int, p: int):
    alpha = 0
    while a % p == 0:
        a //= p
        alpha += 1
    return alpha, a


def _legendre(u: int, p: int) -> int:
    r = pow(u % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else 1


def _is_prime(p: int) -> bool:
    return p >= 2 and factor_int(p) == {p: 1}


def hilbert_symbol(a, b, place) -> int:
    """``(a, b)_v``: +1 iff ``z^2 = a x^2 + b y^2`` has a nonzero solution over Q_v."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if place == REAL:
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    if not _is_prime(p):
        raise ValueError(f"{place!r} is neither a prime nor the real place")
    # Multiplying by squares leaves the symbol unchanged.
    a_int = a.numerator * a.denominator
    b_int = b.numerator * b.denominator
    alpha, u = _split(a_int, p)
    beta, v = _split(b_int, p)
    if p == 2:
        eps = lambda x: ((x - 1) // 2) % 2  # noqa: E731
        omega = lambda x: ((x * x - 1) // 8) % 2  # noqa: E731
        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return sign * _legendre(u, p) ** beta * _legendre(v, p) ** alpha


def is_square_in_Qp(q, p: int) -> bool:
    q = Fraction(q)
    alpha, u = _split(q.numerator * q.denominator, p)
    if alpha % 2:
        return False
    if p == 2:
        return u % 8 == 1
    return _legendre(u, p) == 1


def _relevant_primes(ints) -> list:
    primes = {2}
    for a in ints:
        primes.update(factor_int(a))
    return sorted(primes)


def _locally_isotropic(entries: list, place) -> bool:
    """Isotropy over Q_v for a form of dimension 3 or 4 with integer entries."""
    n = len(entries)
    if place == REAL:
        return min(entries) < 0 < max(entries)
    if n == 3:
        a, b, c = entries
        return hilbert_symbol(-a * c, -b * c, place) == 1
    d = prod(entries)
    if not is_square_in_Qp(d, place):
        return True
    eps = 1
    for i in range(n):
        for j in range(i + 1, n):
            eps *= hilbert_symbol(entries[i], entries[j], place)
    return eps == hilbert_symbol(-1, -1, place)


def _rational_entries(q: DiagonalForm) -> list:
    try:
        return [Fraction(a) for a in q.entries]
    except TypeError as exc:
        raise TypeError("isotropy is decided only for forms over Q") from exc


def isotropic_over_Q(q: DiagonalForm, witness_height: int = 16) -> IsotropyVerdict:
    """Decide isotropy over Q exactly; attach a witness when a short search finds one."""
    entries = _rational_entries(q)
    ints = [squarefree_part(a) for a in entries]
    n = len(ints)
    if n == 1:
        return IsotropyVerdict(False, note="dimension 1")
    if n == 2:
        r = rational_sqrt(-entries[1] / entries[0])
        if r is None:
            return IsotropyVerdict(False, note="-a1*a2 is not a square")
        return IsotropyVerdict(True, (Fraction(r.numerator), Fraction(r.denominator)), note="-a1*a2 is a square")
    indefinite = min(ints) < 0 < max(ints)
    if n >= 5:
        iso = indefinite
        failing = [] if iso else [REAL]
    else:
        places = [REAL] + _relevant_primes(ints)
        failing = [v for v in places if not _locally_isotropic(ints, v)]
        iso = not failing
    if not iso:
        return IsotropyVerdict(False, note=f"locally anisotropic at {failing[0]}", details={"failing": failing})
    from .search import witness_search

    found = witness_search(q, witness_height)
    return IsotropyVerdict(True, found.witness, note="locally isotropic everywhere")
