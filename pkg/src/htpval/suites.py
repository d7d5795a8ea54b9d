"""Verification suites behind the command-line harness.

Each suite returns a :class:`RunReport`.  Randomised suites draw from a
``random.Random`` seeded by the caller, so a seed reproduces a run exactly.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from .elliptic import DEFAULT_CURVE, asymptotics_check, cusp_reduction_check
from .fields import TruncatedLaurent
from .fields.laurent import INF
from .forms import (
    DiagonalForm,
    escalating_search,
    hensel_isotropy_lift,
    isotropic_over_Q,
    orth_sum,
    residue_split,
    tensor,
    witness_search,
)
from .report import RunReport
from .scene import build_scene, g_polynomial, hensel_gamma, t_order, w_ledger
from .valuations import MonomialValuation, MultivariatePoly, MultivariateRatio
from .zxz import verify_encoding

T = TruncatedLaurent.gen("T")


def _timed(fn):
    def run(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# --- elliptic curves --------------------------------------------------------


@_timed
def xy_asymptotics(curve=DEFAULT_CURVE, nmax: int = 6, negative: bool = False) -> RunReport:
    report = RunReport("xy-asymptotics", {"curve": curve.serialize(), "nmax": nmax, "negative": negative})
    ns = list(range(1, nmax + 1)) + ([-n for n in range(1, nmax + 1)] if negative else [])
    for n in ns:
        for c in asymptotics_check(curve, n).checks:
            report.add(c.description, c.expected, c.actual, c.passed)
    return report


@_timed
def cusp_check(curve=DEFAULT_CURVE, nmax: int = 6) -> RunReport:
    report = RunReport("cusp-check", {"curve": curve.serialize(), "nmax": nmax})
    for n in list(range(1, nmax + 1)) + [-n for n in range(1, nmax + 1)]:
        c = cusp_reduction_check(curve, n)
        report.add(c.description, c.expected, c.actual, c.passed)
    return report


# --- Z x Z ------------------------------------------------------------------


@_timed
def zxz_verify(n_range: int = 12, box: int | None = None) -> RunReport:
    r = verify_encoding(n_range, box)
    report = RunReport("zxz-verify", {"range": n_range, "box": r.box})
    report.add(f"triples with |a|,|b|,|c| <= {n_range}", (2 * n_range + 1) ** 3, r.triples, r.triples == (2 * n_range + 1) ** 3)
    first = r.discrepancies[0] if r.discrepancies else None
    report.add("discrepancies between deduction, truth and brute force", 0, len(r.discrepancies) if not first else first, not r.discrepancies)
    report.add("brute-force witnesses with c != ab", 0, r.spurious, r.spurious == 0)
    report.add("brute-force witnesses other than (b, b)", 0, r.non_diagonal_witnesses, r.non_diagonal_witnesses == 0)
    return report


# --- quadratic forms --------------------------------------------------------


def _nonzero(rng: random.Random, lo: int, hi: int) -> int:
    while True:
        a = rng.randint(lo, hi)
        if a:
            return a


def random_rational_form(rng: random.Random, dims=(2, 5), bound: int = 20) -> DiagonalForm:
    n = rng.randint(*dims)
    return DiagonalForm([_nonzero(rng, -bound, bound) for _ in range(n)])


@_timed
def qf_isotropy(form: DiagonalForm | None = None, samples: int = 200, seed: int = 0,
                anisotropy_height: int = 50, max_height: int = 10**4) -> RunReport:
    """Exact isotropy over Q, cross-checked against bounded witness search."""
    report = RunReport("qf-isotropy", {"samples": samples if form is None else 1, "seed": seed,
                                       "anisotropy_height": anisotropy_height, "max_height": max_height})
    if form is not None:
        report.parameters["form"] = str(form)
    rng = random.Random(seed)
    forms = [form] if form is not None else [random_rational_form(rng) for _ in range(samples)]
    contradicted = unconfirmed = unsound = isotropic = 0
    for q in forms:
        verdict = isotropic_over_Q(q)
        isotropic += verdict.isotropic
        if verdict.witness is not None and q.evaluate(verdict.witness) != 0:
            unsound += 1
        if verdict.isotropic:
            found = escalating_search(q, max_height)
            unconfirmed += not found.isotropic
        else:
            contradicted += witness_search(q, anisotropy_height).isotropic
        if form is not None:
            report.add(f"verdict for {q}", "decided", "isotropic" if verdict.isotropic else "anisotropic", True)
    report.add("forms decided isotropic / anisotropic", "both kinds" if form is None else "a verdict",
               f"{isotropic} / {len(forms) - isotropic}", form is not None or 0 < isotropic < len(forms))
    report.add("anisotropic verdicts contradicted by a witness", 0, contradicted, contradicted == 0)
    report.add("isotropic verdicts without a witness of height <= max", 0, unconfirmed, unconfirmed == 0)
    report.add("attached witnesses that do not zero the form", 0, unsound, unsound == 0)
    return report


def random_split_instance(rng: random.Random):
    """``Q1 _|_ <T> (x) Q2`` over Q((T)) with unit entries in [-9, 9]."""
    q1 = DiagonalForm([_nonzero(rng, -9, 9) for _ in range(rng.randint(2, 3))])
    q2 = DiagonalForm([_nonzero(rng, -9, 9) for _ in range(rng.randint(2, 3))])
    return q1, q2, orth_sum(q1, tensor(DiagonalForm([T]), q2))


@_timed
def qf_residue_check(samples: int = 200, seed: int = 0, height: int = 30) -> RunReport:
    """Isotropy over Q((T)) forces isotropy of a residue form."""
    report = RunReport("qf-residue-check", {"samples": samples, "seed": seed, "height": height})
    rng = random.Random(seed)
    found = violations = wrong_split = 0
    for _ in range(samples):
        q1, q2, q = random_split_instance(rng)
        r1, r2 = residue_split(q, T)
        if not (r1 == q1 and r2 == q2):
            wrong_split += 1
        w = witness_search(q, height)
        if not w.isotropic:
            continue
        found += 1
        if not (isotropic_over_Q(r1).isotropic or isotropic_over_Q(r2).isotropic):
            violations += 1
    report.add("residue forms equal the unit parts", 0, wrong_split, wrong_split == 0)
    report.add("instances with a witness found", ">= 1", found, found >= 1)
    report.add("isotropic instances with both residue forms anisotropic", 0, violations, violations == 0)
    return report


def random_liftable_instance(rng: random.Random, prec: int = 14):
    """A form over Q((T)) whose unit part has a residue zero with a simple coordinate.

    Returns the form and the residue witness (zero on the ``T``-part).
    """
    while True:
        k = rng.randint(2, 4)
        x = [rng.randint(-3, 3) for _ in range(k)]
        if x[-1] == 0:
            continue
        heads = [_nonzero(rng, -9, 9) for _ in range(k - 1)]
        last = -Fraction(sum(a * xi * xi for a, xi in zip(heads, x))) / (x[-1] ** 2)
        if last == 0:
            continue
        units = heads + [last]
        break
    entries = []
    for a in units:
        tail = [rng.randint(-5, 5) for _ in range(rng.randint(0, 4))]
        entries.append(TruncatedLaurent([a] + tail, 0, prec, "T"))
    extra = [T * _nonzero(rng, -9, 9) for _ in range(rng.randint(0, 2))]
    form = DiagonalForm(entries + extra)
    return form, tuple(x) + (0,) * len(extra)


@_timed
def qf_hensel_lift(samples: int = 100, seed: int = 0, target: int = 10) -> RunReport:
    report = RunReport("qf-hensel-lift", {"samples": samples, "seed": seed, "target": target})
    rng = random.Random(seed)
    short = 0
    worst = INF
    for _ in range(samples):
        q, w = random_liftable_instance(rng, prec=target + 4)
        verdict = hensel_isotropy_lift(w, q, target)
        order = t_order(q.evaluate(verdict.witness))
        worst = min(worst, order)
        short += order < target
    report.add(f"lifted vectors zero the form to T^{target}", 0, short, short == 0)
    report.add("smallest residual T-order", f">= {target}", worst, worst >= target)
    return report


# --- valuations -------------------------------------------------------------


def random_ratio(rng: random.Random, nvars: int) -> MultivariateRatio:
    def poly():
        while True:
            terms = {}
            for _ in range(rng.randint(1, 3)):
                e = tuple(rng.randint(0, 4) for _ in range(nvars))
                terms[e] = terms.get(e, 0) + _nonzero(rng, -5, 5)
            p = MultivariatePoly(terms, nvars)
            if not p.is_zero():
                return p

    return MultivariateRatio(poly(), poly())


@_timed
def valuation_axioms(samples: int = 500, seed: int = 0) -> RunReport:
    report = RunReport("valuation-axioms", {"samples": samples, "seed": seed})
    rng = random.Random(seed)
    for nvars in (2, 3):
        v = MonomialValuation(tuple(f"X{i + 1}" for i in range(nvars)))
        mult = ultra = strict = 0
        for _ in range(samples):
            x, y = random_ratio(rng, nvars), random_ratio(rng, nvars)
            vx, vy = v.value(x), v.value(y)
            mult += v.value(x * y) != vx + vy
            vs = v.value(x + y)
            ultra += vs < min(vx, vy)
            strict += vx != vy and vs != min(vx, vy)
        report.add(f"{nvars} variables: v(xy) != v(x) + v(y)", 0, mult, mult == 0)
        report.add(f"{nvars} variables: v(x+y) < min(v(x), v(y))", 0, ultra, ultra == 0)
        report.add(f"{nvars} variables: v(x+y) != min when v(x) != v(y)", 0, strict, strict == 0)
    return report


# --- the divisibility scene ---------------------------------------------------


@_timed
def divform_g(curve=DEFAULT_CURVE, lam=1, ms=(1, 3, 5), t_prec: int = 12) -> RunReport:
    scene = build_scene(curve, lam, t_prec)
    report = RunReport("divform-g", {"curve": curve.serialize(), "lambda": scene.lam, "m": list(ms), "precision_t": t_prec})
    from .fields import Polynomial

    for m in ms:
        g = g_polynomial(scene, m)
        red = g.reduction()
        want = Polynomial.monomial(1, g.d, "Z") - Polynomial.monomial(m * m, g.d - 1, "Z")
        report.add(f"m={m}: G mod T (d = {g.d})", want, red, red == want)
        gamma = hensel_gamma(scene, m, g)
        report.add(f"m={m}: gamma mod T", m * m, gamma.residue(), gamma.residue() == m * m)
        res = t_order(g.G(gamma))
        report.add(f"m={m}: T-order of G(gamma)", f">= {t_prec}", res, res >= t_prec)
        if m == 1:
            exact = gamma.is_exact and gamma == 1
            report.add("m=1: gamma is exactly 1", True, exact, exact)
    return report


@_timed
def divform_ledger(curve=DEFAULT_CURVE, lam=1, ms=(1, 3), t_prec: int = 12, z_prec: int = 8,
                   pairs=((1, 0), (1, 1), (-1, 2))) -> RunReport:
    scene = build_scene(curve, lam, t_prec, z_prec)
    report = RunReport("divform-ledger", {"curve": curve.serialize(), "lambda": scene.lam, "m": list(ms),
                                          "precision_t": t_prec, "precision_z": z_prec, "pairs": [list(p) for p in pairs]})
    for m in ms:
        led = w_ledger(scene, m, pairs)
        report.add(f"m={m}: sign branch for sqrt(f(B))", "identity or sigma", led.branch, True)
        for name, want in led.expected.items():
            got = led.orders[name]
            report.add(f"m={m}: w({name})", want, got, got == want)
        for (s, r), got in led.pair_orders.items():
            report.add(f"m={m}: w(y({s}*P1 + {r}*P3))", 0, got, got == 0)
        for desc, expected, actual, ok in led.checks:
            report.add(f"m={m}: {desc}", expected, actual, ok)
    return report
