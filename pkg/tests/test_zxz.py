from hypothesis import given
from hypothesis import strategies as st

from htpval.zxz import ZxZ, brute_force_witnesses, embed, mid, mul_holds, relations_hold, verify_encoding

ints = st.integers(-30, 30)


def test_divisibility_examples():
    assert mid((3, 1), (6, 2))
    assert not mid((3, 1), (5, 2))
    assert mid((2, 4), (6, 12))
    assert mid((0, 0), (0, 0)) and not mid((0, 0), (1, 0))
    assert mid((0, 2), (0, -6)) and not mid((0, 2), (1, 4))


@given(ints, ints, ints)
def test_divisibility_is_module_divisibility(p, q, r):
    assert mid((p, q), (r * p, r * q))


@given(ints, ints, ints, ints)
def test_divisibility_matches_search(p, q, u, v):
    # r is bounded by |u| + |v| whenever (p, q) != 0
    bound = abs(u) + abs(v) + 1
    expected = any((r * p, r * q) == (u, v) for r in range(-bound, bound + 1))
    if (p, q) == (0, 0):
        expected = (u, v) == (0, 0)
    assert mid((p, q), (u, v)) == expected


@given(ints, ints)
def test_embedding_is_additive(a, b):
    assert embed(a) + embed(b) == embed(a + b)
    assert embed(a) - embed(b) == ZxZ(a - b, 0)


def test_multiplication_examples():
    inst = mul_holds(2, 3, 6)
    assert inst.holds and inst.witness == (3, 3)
    assert not mul_holds(2, 3, 5).holds
    assert mul_holds(0, 5, 0).witness == (5, 5)


@given(st.integers(-8, 8), st.integers(-8, 8), st.integers(-64, 64))
def test_encoding_agrees_with_brute_force(a, b, c):
    found = brute_force_witnesses(a, b, c, box=30)
    assert bool(found) == (a * b == c) == mul_holds(a, b, c).holds
    for X in found:
        assert X == (b, b) and relations_hold(a, b, c, X)


def test_exhaustive_small_range():
    report = verify_encoding(1)
    assert report.passed and report.triples == 27


def test_exhaustive_range_twelve():
    report = verify_encoding(12, 41)
    assert report.triples == 25**3
    assert report.passed
