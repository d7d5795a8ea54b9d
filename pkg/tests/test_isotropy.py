"""Hilbert symbols and the exact isotropy decision over Q, against brute force modulo p^k."""

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from htpval.errors import FactorizationLimit
from htpval.forms import (
    REAL,
    DiagonalForm,
    factor_int,
    hilbert_symbol,
    isotropic_over_Q,
    squarefree_part,
    witness_search,
)
from htpval.forms.hilbert import is_square_in_Qp

PRIMES = [2, 3, 5, 7, 11, 13]
nonzero = st.integers(-60, 60).filter(bool)


def primitive_solution_mod(coeffs, p, k):
    """Exhaustive: does sum c_i x_i^2 == 0 mod p^k have a solution with some x_i a unit?"""
    n = p**k
    xs = np.arange(n, dtype=np.int64)
    squares = (xs * xs) % n
    # reachable (value, some-unit-used) states, encoded as value + n * flag
    sq_unit = np.unique(squares[xs % p != 0])
    sq_any = np.unique(squares)
    states = np.array([0], dtype=np.int64)
    for c in coeffs:
        val, flag = states % n, states // n
        with_unit = (val[:, None] + c * sq_unit[None, :]) % n + n
        with_any = (val[:, None] + c * sq_any[None, :]) % n + n * flag[:, None]
        states = np.unique(np.concatenate([with_unit.ravel(), with_any.ravel()]))
    return bool(np.any(states == n))


def brute_hilbert(a, b, p):
    # z^2 - a x^2 - b y^2: squarefree a, b have valuation <= 1, so p^3 (odd) or 2^5 decides
    k = 5 if p == 2 else 3
    return 1 if primitive_solution_mod((1, -a, -b), p, k) else -1


def test_named_symbols():
    assert hilbert_symbol(-1, -1, REAL) == -1
    assert hilbert_symbol(2, 5, 5) == -1
    for place in [REAL] + PRIMES:
        assert hilbert_symbol(2, -1, place) == 1


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_symbols_match_brute_force(p):
    sqfree = [n for n in range(-15, 16) if n and squarefree_part(n) == n]
    for a, b in itertools.combinations_with_replacement(sqfree, 2):
        assert hilbert_symbol(a, b, p) == brute_hilbert(a, b, p), (a, b, p)


@given(nonzero, nonzero)
def test_product_formula(a, b):
    places = [REAL] + sorted(set(factor_int(abs(a))) | set(factor_int(abs(b))) | {2})
    prod = 1
    for v in places:
        prod *= hilbert_symbol(a, b, v)
    assert prod == 1


@given(nonzero, nonzero, nonzero, st.sampled_from([REAL] + PRIMES))
def test_symbol_is_bilinear_and_symmetric(a, b, c, v):
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
    assert hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v)
    assert hilbert_symbol(a, -a, v) == 1


@given(nonzero, st.integers(1, 9), st.sampled_from([REAL] + PRIMES))
def test_symbol_depends_on_square_classes(a, s, v):
    assert hilbert_symbol(a, 7 * s * s, v) == hilbert_symbol(a, 7, v)


def test_squares_in_Qp():
    assert is_square_in_Qp(Fraction(17), 2)
    assert not is_square_in_Qp(Fraction(3), 2)
    assert is_square_in_Qp(Fraction(4, 9), 3)
    assert not is_square_in_Qp(Fraction(3), 3)
    assert is_square_in_Qp(Fraction(2), 7)


def test_factor_int_and_limit():
    assert factor_int(360) == {2: 3, 3: 2, 5: 1}
    assert squarefree_part(Fraction(-18, 5)) == -10
    with pytest.raises(FactorizationLimit):
        factor_int((10**6 + 3) * (10**6 + 33), bound=10**5)


def test_named_anisotropic_forms():
    for entries in ([1, 1, 1, 1], [1, 1, -3], [1, 1, 1, -7]):
        q = DiagonalForm(entries)
        assert not isotropic_over_Q(q).isotropic
        assert not witness_search(q, 50).isotropic


def test_local_obstructions_by_brute_force():
    # x^2 + y^2 - 3 z^2: no primitive zero modulo 9
    assert not primitive_solution_mod((1, 1, -3), 3, 2)
    # x^2 + y^2 + z^2 - 7 w^2: no primitive zero modulo 8
    assert not primitive_solution_mod((1, 1, 1, -7), 2, 3)


def test_low_dimensions():
    assert not isotropic_over_Q(DiagonalForm([5])).isotropic
    v = isotropic_over_Q(DiagonalForm([1, -4]))
    assert v.isotropic and DiagonalForm([1, -4]).evaluate(v.witness) == 0
    assert not isotropic_over_Q(DiagonalForm([1, -2])).isotropic
    assert isotropic_over_Q(DiagonalForm([1, 1, 1, 1, -1])).isotropic
    assert not isotropic_over_Q(DiagonalForm([1, 2, 3, 4, 5, 6])).isotropic


def test_rational_entries():
    q = DiagonalForm([Fraction(1, 2), Fraction(1, 2), -1])
    v = isotropic_over_Q(q)
    assert v.isotropic
    assert witness_search(q, 2).isotropic


forms = st.lists(st.integers(-20, 20).filter(bool), min_size=2, max_size=4).map(DiagonalForm)
squarefree_forms = st.lists(
    st.integers(-30, 30).filter(lambda a: a and squarefree_part(a) == a), min_size=3, max_size=4
).map(DiagonalForm)


@given(forms, st.integers(0, 3), st.integers(2, 6))
def test_scaling_by_squares_keeps_verdict(q, i, s):
    i %= q.dim
    entries = list(q.entries)
    entries[i] *= s * s
    assert isotropic_over_Q(DiagonalForm(entries)).isotropic == isotropic_over_Q(q).isotropic


@given(squarefree_forms)
def test_verdict_is_local_global(q):
    # isotropic over Q iff isotropic over R and over every Q_p with p | 2 * entries
    relevant = {2} | {p for a in q.entries for p in factor_int(abs(int(a)))}
    real_ok = min(q.entries) < 0 < max(q.entries)
    # squarefree entries: a primitive zero mod p^2 (odd p) or 2^5 lifts to Q_p
    local_ok = all(primitive_solution_mod([int(a) for a in q.entries], p, 5 if p == 2 else 2) for p in relevant)
    assert isotropic_over_Q(q).isotropic == (real_ok and local_ok)
