from fractions import Fraction

import pytest
import sympy

from htpval.elliptic import DEFAULT_CURVE, O, WeierstrassCurve, ec_add, scalar_mul
from htpval.errors import EvenM, InsufficientPrecision, PointAtInfinity, SingularCurve, ZeroLambda
from htpval.fields import Polynomial, Status, TruncatedLaurent, status
from htpval.forms import DiagonalForm
from htpval.scene import (
    _base_curve,
    build_scene,
    certified_order,
    combo_point,
    combo_y,
    div_form,
    g_polynomial,
    hensel_gamma,
    multiple_in_tower,
    normalized_parts,
    on_curve_in_tower,
    t_order,
    w_ledger,
)
from htpval.valuations import is_odd

Ts, Zs = sympy.symbols("T Z")


@pytest.fixture(scope="module")
def scene():
    return build_scene()


def test_scene_coordinates(scene):
    T, Z = scene.T, scene.Z
    assert scene.A == (T**-2 + 1) * Z
    assert scene.B == T**-2 + Z
    assert scene.A - scene.B == (Z - 1) / T**2
    assert scene.tower.s1 * scene.tower.s1 == scene.tower(DEFAULT_CURVE.f(scene.A))


def test_scene_with_other_lambda():
    s = build_scene(lam=Fraction(-2, 3))
    T, Z = s.T, s.Z
    assert s.A == (T**-2 - Fraction(2, 3)) * Z
    assert s.B == T**-2 - Fraction(2, 3) * Z


def test_scene_errors():
    with pytest.raises(ZeroLambda):
        build_scene(lam=0)
    with pytest.raises(SingularCurve):
        build_scene(WeierstrassCurve(0, 0, 0))


def test_points_lie_on_the_curve(scene):
    assert on_curve_in_tower(scene, scene.P1)
    assert on_curve_in_tower(scene, scene.P2)
    for n, r in [(1, 1), (1, -1), (2, 1), (-1, 2)]:
        assert on_curve_in_tower(scene, combo_point(scene, n, r))


def test_multiples_agree_with_group_law(scene):
    curve = _base_curve(scene.curve)
    for n in (2, 3, -2):
        assert multiple_in_tower(scene, n, 1) == scalar_mul(curve, n, scene.P1, check=False)
    assert multiple_in_tower(scene, 0, 2) is O


def test_combination_coordinates(scene):
    s1 = scene.tower.s1
    assert combo_y(scene, 1, 0) == s1
    assert combo_y(scene, -1, 0) == -s1
    x3 = combo_point(scene, 1, 1).x
    y3 = combo_y(scene, 1, 1)
    # the chord slope (s1 - s2) / (A - B) puts y(P1+P2) in the span of s1, s2 and x(P1+P2)
    # in the span of 1 and s1 s2
    assert y3.coords[3] == 0 and y3.coords[0] == 0
    assert y3.coords[1] != 0 and y3.coords[2] != 0
    assert x3.coords[3] != 0
    with pytest.raises(PointAtInfinity):
        combo_y(scene, 0, 0)


def test_chord_matches_sympy(scene):
    # x(P1 + P2) = lambda^2 - A - B with lambda = (s1 - s2)/(A - B), expanded by hand in coordinates
    A, B = scene.A, scene.B
    fA, fB = DEFAULT_CURVE.f(A), DEFAULT_CURVE.f(B)
    d = (A - B) ** 2
    x3 = combo_point(scene, 1, 1).x
    assert x3.coords[0] == (fA + fB) / d - A - B
    assert x3.coords[3] == -2 / d


def test_div_form(scene):
    q = div_form(scene, 1, 1, 1, DiagonalForm([1]))
    assert q.dim == 4
    y3 = combo_y(scene, 1, 1)
    assert q.same_entries(DiagonalForm([scene.tower.one(), y3, y3, y3 * y3]))
    assert div_form(scene, 1, 2, 1, DiagonalForm([1, 1])).dim == 8
    with pytest.raises(EvenM):
        div_form(scene, 2, 1, 1, DiagonalForm([1]))


def test_normalized_parts():
    for m in (1, 3, 5):
        R, S = normalized_parts(DEFAULT_CURVE, m)
        assert R.lc() == 1 and S.lc() == m * m
        assert S.degree() == R.degree() - 1


@pytest.mark.parametrize("m", [1, 3, 5])
def test_g_reduction_and_root(scene, m):
    g = g_polynomial(scene, m)
    want = Polynomial.monomial(1, g.d, "Z") - Polynomial.monomial(m * m, g.d - 1, "Z")
    assert g.reduction() == want
    gamma = hensel_gamma(scene, m, g)
    assert gamma.residue() == m * m
    assert t_order(g.G(gamma)) >= scene.t_prec


def test_g_for_first_multiple(scene):
    g = g_polynomial(scene, 1)
    assert g.d == 1
    assert g.G == Polynomial([-1, 1], "Z")
    gamma = hensel_gamma(scene, 1, g)
    assert gamma.is_exact and gamma == 1
    with pytest.raises(EvenM):
        g_polynomial(scene, 2)


def test_g_matches_sympy_for_m3(scene):
    # independent expansion of T^{2d} (R(A) - S(A) B) with sympy
    g = g_polynomial(scene, 3)
    R, S = g.R, g.S
    A = (Ts**-2 + 1) * Zs
    B = Ts**-2 + Zs

    def ev(p, x):
        return sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coeffs))

    G = sympy.expand(Ts ** (2 * g.d) * (ev(R, A) - ev(S, A) * B))
    Gp = sympy.Poly(G, Zs)
    for k, c in enumerate(g.G.coeffs):
        want = sympy.expand(Gp.coeff_monomial(Zs**k))
        ours = sum(sympy.Rational(a.numerator, a.denominator) * Ts ** (c.val + i) for i, a in enumerate(c.coeffs))
        assert sympy.expand(ours - want) == 0


@pytest.mark.parametrize("m", [1, 3])
def test_ledger(scene, m):
    led = w_ledger(scene, m)
    assert led.passed
    assert led.orders == led.expected
    assert set(led.pair_orders.values()) == {0}
    assert led.branch in ("identity", "sigma")
    assert led.root_residual_order >= scene.t_prec
    assert is_odd(led.orders["y(P3)"]) and not is_odd(led.orders["x(P3)"])


def test_certified_order_margin():
    # coefficients are T-series; eps^0 is zero only to O(T^3), eps^1 certified with T-valuation 0
    c0 = TruncatedLaurent.bigoh(3)
    c1 = TruncatedLaurent([2], 0, 10)
    s = TruncatedLaurent([c0, c1], 0, 5, "eps")
    with pytest.raises(InsufficientPrecision):
        certified_order(s, margin=6)
    assert certified_order(s, margin=3).order == 1
    assert status(c1) is Status.NONZERO


def test_scalar_mul_in_tower(scene):
    curve = _base_curve(scene.curve)
    two = ec_add(curve, scene.P1, scene.P1, check=False)
    assert two == multiple_in_tower(scene, 2, 1)
