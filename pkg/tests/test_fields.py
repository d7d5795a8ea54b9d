from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from htpval.errors import DivisionByZero, InsufficientPrecision, OddLeadingExponent
from htpval.fields import (
    INF,
    INFINITY,
    BiquadraticTower,
    Polynomial,
    RationalFunction,
    Status,
    TruncatedLaurent,
    order_at,
    poly_divmod,
    poly_gcd,
    rational_sqrt,
    sqrt_lift,
    tower_conjugate,
)

Zs = sympy.Symbol("Z")
Z = RationalFunction.gen("Z")
T = TruncatedLaurent.gen("T")

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)
coeff_lists = st.lists(st.integers(-6, 6), min_size=0, max_size=5)


def poly(cs):
    return Polynomial([Fraction(c) for c in cs], "Z")


def to_sympy(p: Polynomial):
    return sum(sympy.Rational(c.numerator, c.denominator) * Zs**i for i, c in enumerate(p.coeffs))


def ratfunc_to_sympy(f: RationalFunction):
    return to_sympy(f.num) / to_sympy(f.den)


def test_rational_sum():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_rational_function_cancels_common_factor():
    f = (Z**2 - 1) / (Z - 1)
    assert f == Z + 1
    assert f.den == Polynomial([1], "Z")


def test_geometric_series_inverse():
    one_plus_t = TruncatedLaurent([1, 1], 0, 3)
    inv = TruncatedLaurent([1, -1, 1], 0, 3)
    prod = one_plus_t * inv
    assert prod.prec == 3
    assert prod == TruncatedLaurent([1], 0, 3)
    assert (1 / one_plus_t) == inv


def test_order_at_finite_point_and_infinity():
    assert order_at(Z - 1, Fraction(1)) == 1
    assert order_at(Z / 4, INFINITY) == -1
    x2 = (Z**4 - 2 * Z**2 - 8 * Z + 1) / (4 * Z**3 + 4 * Z + 4)
    assert order_at(x2, INFINITY) == -1
    assert order_at(1 / (Z - 1) ** 2, Fraction(1)) == -2


def test_zero_status_is_three_valued():
    assert T.zero_status() is Status.NONZERO
    assert TruncatedLaurent.bigoh(4).zero_status() is Status.UNKNOWN
    assert TruncatedLaurent([]).zero_status() is Status.ZERO


def test_division_by_exact_zero_raises():
    with pytest.raises(DivisionByZero):
        Z / RationalFunction(0)


def test_division_by_unknown_raises_insufficient_precision():
    with pytest.raises(InsufficientPrecision):
        T / TruncatedLaurent.bigoh(3)


def test_laurent_negative_valuation_product():
    x = TruncatedLaurent([1, 2], -2, 4)  # T^-2 + 2T^-1 + O(T^4)
    y = TruncatedLaurent([3], 1, 5)  # 3T + O(T^5)
    p = x * y
    assert p.val == -1
    assert p.prec == 3
    assert p.coefficient(-1) == 3 and p.coefficient(0) == 6


@given(coeff_lists, coeff_lists)
def test_polynomial_ring_ops_match_sympy(a, b):
    p, q = poly(a), poly(b)
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
    assert sympy.expand(to_sympy(p + q) - to_sympy(p) - to_sympy(q)) == 0


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_divmod_reconstructs(a, b):
    p, q = poly(a), poly(b)
    quo, rem = poly_divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree() < q.degree() or not rem.coeffs


@given(coeff_lists.filter(any), coeff_lists.filter(any))
def test_gcd_matches_sympy(a, b):
    p, q = poly(a), poly(b)
    g = poly_gcd(p, q)
    expected = sympy.Poly(sympy.gcd(to_sympy(p), to_sympy(q)), Zs).monic()
    assert sympy.expand(to_sympy(g.monic()) - expected.as_expr()) == 0


@settings(max_examples=60)
@given(coeff_lists.filter(any), coeff_lists.filter(any), coeff_lists.filter(any), coeff_lists.filter(any))
def test_rational_function_field_ops_match_sympy(a, b, c, d):
    f = RationalFunction(poly(a), poly(b))
    g = RationalFunction(poly(c), poly(d))
    for ours, theirs in [
        (f + g, ratfunc_to_sympy(f) + ratfunc_to_sympy(g)),
        (f * g, ratfunc_to_sympy(f) * ratfunc_to_sympy(g)),
        (f / g, ratfunc_to_sympy(f) / ratfunc_to_sympy(g)),
    ]:
        assert sympy.simplify(ratfunc_to_sympy(ours) - theirs) == 0


@given(small, small, small)
def test_rational_function_field_axioms(a, b, c):
    x, y, w = Z + a, Z * Z - b, 1 / (Z - c)
    assert (x + y) * w == x * w + y * w
    assert (x * y) * w == x * (y * w)
    assert x * (1 / x) == 1


series = st.builds(
    lambda cs, v: TruncatedLaurent([Fraction(c) for c in cs], v, v + 8),
    st.lists(st.integers(-5, 5), min_size=1, max_size=6),
    st.integers(-3, 3),
)


@given(series, series, series)
def test_laurent_ring_axioms_up_to_precision(x, y, w):
    lhs = (x + y) * w
    rhs = x * w + y * w
    assert (lhs - rhs).zero_status() is not Status.NONZERO
    assert ((x * y) * w - x * (y * w)).zero_status() is not Status.NONZERO


@given(series)
def test_laurent_inverse(x):
    if x.zero_status() is not Status.NONZERO:
        return
    one = x * x.inverse()
    assert one.coefficient(0) == 1
    assert (one - 1).zero_status() is not Status.NONZERO
    # relative precision is preserved
    assert x.inverse().relative_precision() == x.relative_precision()


def test_sqrt_lift_examples():
    u = TruncatedLaurent([1, 1], 0, 3)
    r = sqrt_lift(u, 1, 3)
    assert r == TruncatedLaurent([1, Fraction(1, 2), Fraction(-1, 8)], 0, 3)
    assert sqrt_lift(T * T, -1) == -T
    with pytest.raises(OddLeadingExponent):
        sqrt_lift(T)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


def test_tower_conjugations():
    tower = BiquadraticTower(Fraction(2), Fraction(3))
    s1, s2 = tower.s1, tower.s2
    x = tower(1, 2, 3, 4)
    assert tower_conjugate(tower(5, 0, 7, 0), 2) == tower(5, 0, -7, 0)
    assert tower_conjugate(tower_conjugate(x, 2), 2) == x
    assert tower_conjugate((s1 + s2) ** 2, 2) == (s1 - s2) ** 2
    assert (s1 + s2) ** 2 == tower(5, 0, 0, 2)
    assert x * x.inverse() == tower.one()


@given(st.tuples(small, small, small, small), st.tuples(small, small, small, small))
def test_tower_is_a_field(a, b):
    tower = BiquadraticTower(Fraction(2), Fraction(5))
    x, y = tower(*a), tower(*b)
    assert (x * y).norm() == x.norm() * y.norm()
    if any(a):
        assert x * x.inverse() == tower.one()
        assert (x * y) / x == y


def test_tower_over_rational_functions():
    tower = BiquadraticTower(Z**3 + Z + 1, Z + 2)
    s1, s2 = tower.s1, tower.s2
    assert s1 * s1 == tower(Z**3 + Z + 1)
    assert (s1 * s2) ** 2 == tower((Z**3 + Z + 1) * (Z + 2))


def test_infinite_precision_constant():
    assert T.prec == INF
    assert (T + 1).is_exact
