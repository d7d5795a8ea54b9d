import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from htpval.errors import InfinityInput, NegativeValue
from htpval.fields import INFINITY, RationalFunction, TruncatedLaurent
from htpval.suites import random_ratio
from htpval.valuations import (
    LexValue,
    MonomialValuation,
    MultivariatePoly,
    MultivariateRatio,
    PointValuation,
    TAdicValuation,
    compose_project,
    is_odd,
    monomial_value,
    residue,
)

Z = RationalFunction.gen("Z")
X1 = MultivariatePoly.monomial((1, 0))
X2 = MultivariatePoly.monomial((0, 1))
V2 = MonomialValuation(("X1", "X2"))

values = st.lists(st.integers(-50, 50), min_size=3, max_size=3).map(LexValue)


def test_parity():
    assert is_odd((1, 0))
    assert not is_odd((2, 4))
    assert is_odd((0, 3))
    with pytest.raises(InfinityInput):
        is_odd(LexValue.infinity())


def test_monomial_values():
    assert V2.value(X1**2 * X2**3) == (2, 3)
    assert V2.value(X1 + X2) == (0, 1)
    assert V2.value(MultivariatePoly.constant(0, 2)).is_infinite
    assert monomial_value(V2, MultivariateRatio(X2, X1)) == (-1, 1)


def test_compose_project():
    u, v = compose_project((2, 3), 1, 1)
    assert v == (2,) and u == (3,)
    u, v = compose_project((0, 5), 1, 1)
    assert v == (0,) and u == (5,)
    assert is_odd((1, 4))
    with pytest.raises(ValueError):
        compose_project((1, 2, 3), 1, 1)


def test_infinity_is_the_top_element():
    inf = LexValue.infinity()
    assert LexValue((10**9, 0)) < inf
    assert inf + LexValue((1, 1)) == inf
    assert min(inf, LexValue((3, -1))) == (3, -1)


@given(values, values, values)
def test_lex_order_is_a_total_group_order(a, b, c):
    assert (a < b) + (b < a) + (a == b) == 1
    if a <= b:
        assert a + c <= b + c
    assert (a + b) - b == a


def test_t_adic_valuation():
    v = TAdicValuation()
    x = TruncatedLaurent([3, 5], 0, 2)
    assert residue(v, x) == 3
    assert v.value(TruncatedLaurent([2], -3)) == (-3,)
    assert v.uniformizer == TruncatedLaurent.gen("T")


def test_point_valuation_residues():
    v = PointValuation(Fraction(1))
    assert residue(v, (Z**2 - 1) / (Z + 2)) == 0
    assert residue(v, Z - 1) == 0
    assert residue(v, (Z + 3) / (Z - 2)) == -4
    with pytest.raises(NegativeValue):
        residue(v, 1 / (Z - 1))
    assert PointValuation(INFINITY).value(Z**3) == (-3,)
    assert residue(PointValuation(INFINITY), (2 * Z + 1) / (Z - 4)) == 2


def test_monomial_residue():
    assert V2.residue(MultivariateRatio(3 + X2, MultivariatePoly.constant(2, 2))) == Fraction(3, 2)
    with pytest.raises(NegativeValue):
        V2.residue(MultivariateRatio(MultivariatePoly.constant(1, 2), X1))


def _sympy_lex_min(p: MultivariatePoly, gens):
    expr = sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod(g**e for g, e in zip(gens, exps))
               for exps, c in p.terms.items())
    return min(sympy.Poly(expr, *gens).monoms())


@pytest.mark.parametrize("nvars", [2, 3])
def test_value_matches_sympy_lex_min(nvars):
    rng = random.Random(7)
    gens = sympy.symbols(f"x1:{nvars + 1}")
    v = MonomialValuation(tuple(str(g) for g in gens))
    for _ in range(100):
        x = random_ratio(rng, nvars)
        want = LexValue(_sympy_lex_min(x.num, gens)) - LexValue(_sympy_lex_min(x.den, gens))
        assert v.value(x) == want


ratios2 = st.integers(0, 2**32).map(lambda seed: random_ratio(random.Random(seed), 2))


@given(ratios2, ratios2)
def test_valuation_axioms(x, y):
    vx, vy = V2.value(x), V2.value(y)
    assert V2.value(x * y) == vx + vy
    vs = V2.value(x + y)
    assert vs >= min(vx, vy)
    if vx != vy:
        assert vs == min(vx, vy)
