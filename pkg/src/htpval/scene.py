"""The divisibility scene over ``K = Q((T))``.

With ``A = (T^-2 + lam) Z`` and ``B = T^-2 + lam Z`` the points
``P1 = (A, sqrt f(A))`` and ``P2 = (B, sqrt f(B))`` live on ``E`` over the
biquadratic extension ``L = K(Z)(sqrt f(A), sqrt f(B))``.  This module builds
them, the quadratic form ``<1, y(mP1 + P2)> (x) <1, y(nP1 + rP2)> (x) Q``, the
polynomial ``G`` whose simple root ``gamma`` makes ``x(mP1) = x(P2)`` at
``Z = gamma``, and the orders at ``Z = gamma`` of the quantities that decide the
residue forms of that quadratic form.

Two models of the base field are used.  Group-law computations in the tower use
the exact field Q(T, Z) (sympy's sparse rational function field).  Orders at
``Z = gamma`` use power series in ``eps = Z - gamma`` whose coefficients are truncated Laurent series in ``T``,
since ``gamma`` itself is only known to a finite T-adic precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from sympy import QQ
from sympy.polys.fields import field as rational_function_field

from .elliptic import DEFAULT_CURVE, O, CurvePoint, WeierstrassCurve, ec_add, scalar_mul, twist_multiples
from .errors import (
    EvenM,
    InsufficientPrecision,
    NoValidSignChoice,
    PointAtInfinity,
    SingularCurve,
    ZeroLambda,
)
from .fields import (
    BiquadraticTower,
    Polynomial,
    RationalFunction,
    TruncatedLaurent,
    hensel_lift_root,
    sqrt_lift,
)
from .fields.base import Status, status, to_fraction
from .fields.laurent import INF
from .forms import DiagonalForm, tensor
from .valuations import is_odd

EPS = "eps"


BASE_FIELD, T_GEN, Z_GEN = rational_function_field("T,Z", QQ)


@dataclass(frozen=True, eq=False)
class Scene:
    curve: WeierstrassCurve
    lam: Fraction
    t_prec: int
    z_prec: int
    A: object
    B: object
    tower: BiquadraticTower

    T = T_GEN
    Z = Z_GEN

    @property
    def P1(self) -> CurvePoint:
        return CurvePoint(self.tower(self.A), self.tower.s1)

    @property
    def P2(self) -> CurvePoint:
        return CurvePoint(self.tower(self.B), self.tower.s2)


def _qq(c: Fraction):
    return QQ(c.numerator, c.denominator)


def build_scene(curve: WeierstrassCurve = DEFAULT_CURVE, lam=1, t_prec: int = 12, z_prec: int = 8) -> Scene:
    """``A``, ``B`` and the tower ``Q(T, Z)(sqrt f(A), sqrt f(B))``."""
    lam = to_fraction(lam)
    if lam == 0:
        raise ZeroLambda("lambda must be nonzero")
    if not curve.is_nonsingular():
        raise SingularCurve(f"{curve!r} is singular")
    if curve.a6 == 0:
        raise ValueError("the curve needs a6 != 0")
    if t_prec < 1 or z_prec < 1:
        raise ValueError("precisions must be positive")
    T, Z = T_GEN, Z_GEN
    A = (T**-2 + _qq(lam)) * Z
    B = T**-2 + _qq(lam) * Z
    tower = BiquadraticTower(_base_curve(curve).f(A), _base_curve(curve).f(B))
    return Scene(curve, lam, t_prec, z_prec, A, B, tower)


def _base_curve(curve: WeierstrassCurve) -> WeierstrassCurve:
    return WeierstrassCurve(*(BASE_FIELD(_qq(Fraction(a))) for a in (curve.a2, curve.a4, curve.a6)))


# --- exact tower arithmetic -------------------------------------------------


def _compose(f: RationalFunction, x):
    """``f(x)`` for ``f`` over Q and ``x`` in Q(T, Z)."""

    def horner(p: Polynomial):
        acc = BASE_FIELD(0)
        for c in reversed(p.coeffs):
            acc = acc * x + _qq(c)
        return acc

    return horner(f.num) / horner(f.den)


def multiple_in_tower(scene: Scene, n: int, which: int):
    """``n * P_which`` from the twist multiples: ``(X_n(x), Y_n(x) s)``."""
    if n == 0:
        return O
    x = scene.A if which == 1 else scene.B
    s = scene.tower.s1 if which == 1 else scene.tower.s2
    X, Y = twist_multiples(scene.curve, n)
    return CurvePoint(scene.tower(_compose(X, x)), s * _compose(Y, x))


def combo_point(scene: Scene, n: int, r: int):
    curve = _base_curve(scene.curve)
    return ec_add(curve, multiple_in_tower(scene, n, 1), multiple_in_tower(scene, r, 2), check=False)


def combo_y(scene: Scene, n: int, r: int):
    """``y(n P1 + r P2)`` in the tower."""
    P = combo_point(scene, n, r)
    if P is O:
        raise PointAtInfinity(f"{n}*P1 + {r}*P2 is the point at infinity")
    return P.y


def on_curve_in_tower(scene: Scene, P) -> bool:
    if P is O:
        return True
    return P.y * P.y == _base_curve(scene.curve).f(P.x)


def div_form(scene: Scene, m: int, n: int, r: int, Q: DiagonalForm) -> DiagonalForm:
    """``<1, y(m P1 + P2)> (x) <1, y(n P1 + r P2)> (x) Q`` over the tower."""
    if m % 2 == 0:
        raise EvenM(f"m = {m} must be odd")
    one = scene.tower.one()
    first = DiagonalForm((one, combo_y(scene, m, 1)))
    second = DiagonalForm((one, combo_y(scene, n, r)))
    return tensor(tensor(first, second), Q)


# --- the polynomial G and its root --------------------------------------------


def _laurent(c) -> TruncatedLaurent:
    return c if isinstance(c, TruncatedLaurent) else TruncatedLaurent((c,), 0, INF, "T")


def normalized_parts(curve: WeierstrassCurve, m: int):
    """``X_m = R_m / S_m`` with ``R_m`` monic; returns ``(R_m, S_m)``."""
    X, _ = twist_multiples(curve, m)
    lead = X.num.lc()
    R = X.num * (1 / lead)
    S = X.den * (1 / lead)
    if S.degree() != R.degree() - 1 or S.lc() != m * m:
        raise ArithmeticError(f"unexpected leading terms for X_{m}: {R!r} / {S!r}")
    return R, S


@dataclass
class GData:
    G: Polynomial
    d: int
    R: Polynomial
    S: Polynomial

    def reduction(self) -> Polynomial:
        return Polynomial([c.residue() for c in self.G.coeffs], "Z")


def g_polynomial(scene: Scene, m: int) -> GData:
    """``G = T^{2d} R_m(A) - T^{2d} S_m(A) B`` with exact T-Laurent-polynomial coefficients."""
    if m % 2 == 0:
        raise EvenM(f"m = {m} must be odd")
    R, S = normalized_parts(scene.curve, m)
    d = R.degree()
    inv_t2 = TruncatedLaurent.monomial(1, -2)
    A = Polynomial((0, inv_t2 + scene.lam), "Z")
    B = Polynomial((inv_t2, scene.lam), "Z")
    scale = TruncatedLaurent.monomial(1, 2 * d)
    G = scale * R(A) - scale * S(A) * B
    G = Polynomial([_laurent(c) for c in G.coeffs], "Z")
    for c in G.coeffs:
        if c.coeffs and c.val < 0:
            raise ArithmeticError("G has a coefficient outside the valuation ring")
    return GData(G, d, R, S)


def hensel_gamma(scene: Scene, m: int, gdata: GData | None = None) -> TruncatedLaurent:
    """The root of ``G`` congruent to ``m^2`` modulo ``T``, to ``T^t_prec``."""
    gdata = g_polynomial(scene, m) if gdata is None else gdata
    return hensel_lift_root(gdata.G, Fraction(m * m), scene.t_prec, "T")


def t_order(x) -> float:
    """T-adic order certified by a truncated value: exact zero gives infinity."""
    x = _laurent(x)
    if x.zero_status() is Status.ZERO:
        return INF
    if x.zero_status() is Status.NONZERO:
        return x.valuation()
    return x.prec


# --- series in eps = Z - gamma ------------------------------------------------


def _eps_series(coeffs, prec) -> TruncatedLaurent:
    return TruncatedLaurent([_laurent(c) for c in coeffs], 0, prec, EPS)


def _synthetic_quotient(G: Polynomial, root) -> tuple:
    """``G = (Z - root) * Q + rem``; returns ``(Q, rem)``."""
    coeffs = list(G.coeffs)
    acc = []
    carry = 0
    for c in reversed(coeffs):
        carry = c + carry * root
        acc.append(carry)
    rem = acc.pop()
    return Polynomial(list(reversed(acc)), "Z"), rem


@dataclass
class OrderEvidence:
    order: int
    leading: object
    skipped: list = field(default_factory=list)


def certified_order(s: TruncatedLaurent, margin: int = 6) -> OrderEvidence:
    """``eps``-order of a series whose coefficients are truncated T-series.

    The first coefficient certified nonzero gives the order.  Coefficients
    before it are zero to their T-precision only; they are accepted as zero
    when that precision exceeds the T-valuation of the certified coefficient by
    at least ``margin``, and otherwise the order is not certified.
    """
    skipped = []
    for i, c in enumerate(s.coeffs):
        st = status(c)
        if st is Status.NONZERO:
            lead_v = _laurent(c).valuation()
            for exp, p in skipped:
                if p < lead_v + margin:
                    raise InsufficientPrecision(
                        f"coefficient of eps^{exp} is only known to be O(T^{p}); need T^{lead_v + margin}"
                    )
            return OrderEvidence(s.val + i, c, skipped)
        skipped.append((s.val + i, _laurent(c).prec))
    raise InsufficientPrecision(f"no coefficient certified nonzero below eps^{s.prec}")


@dataclass
class LedgerReport:
    m: int
    gamma: TruncatedLaurent
    branch: str
    orders: dict
    pair_orders: dict
    root_residual_order: float
    t_prec: int
    z_prec: int
    checks: list = field(default_factory=list)

    @property
    def expected(self) -> dict:
        return {"X_m(A)-B": 1, "Y_m(A)sqrt(f(A))-sqrt(f(B))": 0, "x(P3)": -2, "y(P3)": -3}

    @property
    def passed(self) -> bool:
        return (
            all(self.orders[k] == v for k, v in self.expected.items())
            and all(v == 0 for v in self.pair_orders.values())
            and all(c[3] for c in self.checks)
        )


def _rational_at(f: RationalFunction, x):
    return f.num(x) / f.den(x)


def w_ledger(scene: Scene, m: int, pairs=((1, 0), (1, 1), (-1, 2)), margin: int = 6) -> LedgerReport:
    """Orders at ``Z = gamma`` of the quantities in the residue-form argument for ``P3 = m P1 + P2``."""
    if m % 2 == 0:
        raise EvenM(f"m = {m} must be odd")
    for s, _ in pairs:
        if s == 0:
            raise ValueError("pairs need s != 0")
    curve = scene.curve
    zp = scene.z_prec
    gdata = g_polynomial(scene, m)
    gamma = hensel_gamma(scene, m, gdata)
    G1, rem = _synthetic_quotient(gdata.G, gamma)
    root_residual = t_order(rem)

    # an exact gamma is truncated too, so that square roots have a target precision
    g = gamma.add_bigoh(scene.t_prec)
    c = TruncatedLaurent.monomial(1, -2) + scene.lam
    A_s = _eps_series((c * g, c), zp)
    B_s = _eps_series((TruncatedLaurent.monomial(1, -2) + scene.lam * g, scene.lam), zp)
    Z_s = _eps_series((g, 1), zp)

    X_m, Y_m = twist_multiples(curve, m)
    x1 = _rational_at(X_m, A_s)
    # X_m(A) - B = eps * T^{-2d} G1(Z) / S_m(A), dropping G(gamma) = O(T^t_prec)
    H = (G1(Z_s) * TruncatedLaurent.monomial(1, -2 * gdata.d) / gdata.S(A_s)).shift(1)
    direct = x1 - B_s
    checks = [
        (
            "X_m(A) - B agrees with eps*G1/S_m(A) at eps^0",
            "not certified nonzero",
            str(status(direct.coefficient(0)).value),
            status(direct.coefficient(0)) is not Status.NONZERO,
        )
    ]

    s1 = sqrt_lift(curve.f(A_s), 1)
    s2_plus = sqrt_lift(curve.f(B_s), 1)
    y1 = _rational_at(Y_m, A_s) * s1
    branches = {}
    for sign, name in ((1, "identity"), (-1, "sigma")):
        diff = y1 - sign * s2_plus
        branches[name] = (sign, diff, status(diff.coefficient(0)))
    certified = [k for k, v in branches.items() if v[2] is Status.NONZERO]
    if len(certified) != 1:
        raise NoValidSignChoice(
            "expected exactly one sign of sqrt(f(B)) making the points opposite, got "
            + ", ".join(f"{k}: {v[2].value}" for k, v in branches.items())
        )
    branch = certified[0]
    sign, ydiff, _ = branches[branch]
    y2 = sign * s2_plus

    slope = ydiff / H
    x3 = slope * slope - curve.a2 - x1 - B_s
    y3 = slope * (x1 - x3) - y1
    P1 = CurvePoint(A_s, s1)
    P3 = CurvePoint(x3, y3)

    orders = {
        "X_m(A)-B": certified_order(H, margin).order,
        "Y_m(A)sqrt(f(A))-sqrt(f(B))": certified_order(ydiff, margin).order,
        "x(P3)": certified_order(x3, margin).order,
        "y(P3)": certified_order(y3, margin).order,
    }
    pair_orders = {}
    for s, r in pairs:
        R = ec_add(curve, scalar_mul(curve, s, P1, check=False), scalar_mul(curve, r, P3, check=False), check=False)
        if R is O:
            raise PointAtInfinity(f"{s}*P1 + {r}*P3 is the point at infinity")
        pair_orders[(s, r)] = certified_order(R.y, margin).order
        on = status(R.y * R.y - curve.f(R.x)) is not Status.NONZERO
        checks.append((f"y^2 = f(x) for {s}*P1 + {r}*P3", True, on, on))
    for name, P in (("P1", P1), ("mP1", CurvePoint(x1, y1)), ("P2", CurvePoint(B_s, y2)), ("P3", P3)):
        on = status(P.y * P.y - curve.f(P.x)) is not Status.NONZERO
        checks.append((f"y^2 = f(x) for {name}", True, on, on))
    checks.append(("G(gamma) has T-order >= t_prec", f">= {scene.t_prec}", root_residual, root_residual >= scene.t_prec))
    yo, xo = orders["y(P3)"], orders["x(P3)"]
    checks.append((f"w(y(P3)) = {yo} is odd", True, is_odd(yo), is_odd(yo)))
    checks.append((f"w(x(P3)) = {xo} is even", True, not is_odd(xo), not is_odd(xo)))
    return LedgerReport(m, gamma, branch, orders, pair_orders, root_residual, scene.t_prec, zp, checks)
