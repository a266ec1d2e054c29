"""Acceptance criteria, one test each.

A one-line verdict per criterion is printed in the "acceptance criteria"
section of the terminal summary.
"""

import math
import time
from fractions import Fraction as F

from besselradii import (
    RadiusKind,
    asymptotic_radius,
    direct_radius,
    euler_rayleigh_bracket,
    leading_constant,
    mittag_leffler_residual,
    power_sums,
    power_sums_via_potential,
)
from besselradii.asympt import epsilon_coeffs
from besselradii.radii import alt_uconv_g_k1_upper
from besselradii.rayleigh import laurent_eta, laurent_theta, weierstrass_family
from besselradii.series import SeriesFamily

CG, CH, UG, UH = RadiusKind.CONV_G, RadiusKind.CONV_H, RadiusKind.UCONV_G, RadiusKind.UCONV_H

# target (leading constant, eps_1) pairs
TARGETS = {
    CG: (0.535898, 0.335953),
    CH: (1.17157, 0.858757),
    UG: (0.298438, 0.218612),
    UH: (0.627719, 0.478612),
}
CAPTIONS = {CG: 5.208, CH: 59.437, UG: 3.891, UH: 31.86}


def _oracle_t(kind, nu, tol=F(1, 10 ** 12)):
    iv = direct_radius(kind, nu, tol)
    if kind.squared:
        return iv.lo ** 2, iv.hi ** 2
    return iv.lo, iv.hi


def _clear_asympt_caches():
    from besselradii import asympt, rayleigh

    asympt._expansion_cached.cache_clear()
    asympt._leading_cached.cache_clear()
    rayleigh._laurent_table.cache_clear()


def test_ac01_asymptotic_constants(detail):
    _clear_asympt_caches()
    start = time.perf_counter()
    misses = []
    for kind, (c_pub, e_pub) in TARGETS.items():
        lead = float(leading_constant(kind, M=20).midpoint)
        eps1 = float(epsilon_coeffs(kind, 1, M=20)[0])
        for name, got, want in (("lead", lead, c_pub), ("eps1", eps1, e_pub)):
            if abs(got - want) > 2e-5:
                misses.append(f"{kind.tag} {name} {got:.6f} vs {want}")
    elapsed = time.perf_counter() - start
    detail(f"{elapsed:.2f}s; " + (", ".join(misses) if misses else "all 8 constants within 2e-5"))
    assert not misses, misses
    assert elapsed < 10


def test_ac02_figure_captions(detail):
    _clear_asympt_caches()
    start = time.perf_counter()
    misses = []
    for kind, caption in CAPTIONS.items():
        c_pub, e_pub = TARGETS[kind]
        formula = math.sqrt(50 * c_pub + e_pub) if kind.squared else 50 * c_pub + e_pub
        got = asymptotic_radius(kind, 50, 2)
        if abs(got - formula) > 1e-3:
            misses.append(f"{kind.tag} {got:.4f} vs {formula:.4f} (caption {caption})")
    elapsed = time.perf_counter() - start
    detail(f"{elapsed:.2f}s; " + (", ".join(misses) if misses else "all four within 1e-3"))
    assert not misses, misses
    assert elapsed < 1


def test_ac03_closed_form_brackets(detail):
    for nu in (F(0), F(1, 3), F(1), F(7, 2), F(20)):
        br = euler_rayleigh_bracket(CG, nu, 2)
        # lower bound of the squared radius is 4 sqrt(q): compare squares exactly
        q = (nu + 1) ** 2 * (nu + 2) / (56 * nu + 137)
        assert br.lower_power == 16 * q
        assert br.upper == 2 * (56 * nu + 137) * (nu + 1) * (nu + 3) / (
            208 * nu ** 2 + 1172 * nu + 1693
        )
        u = euler_rayleigh_bracket(UG, nu, 1)
        assert u.lower == 4 * (nu + 1) / 15 and u.exact_lower
    detail("identities exact at nu = 0, 1/3, 1, 7/2, 20")


def test_ac04_interval_containment(detail):
    c = leading_constant(CG)
    assert c.lo ** 2 > F(2, 7) and c.hi < F(7, 13)
    ct = leading_constant(UG)
    assert F(4, 15) < ct.lo and ct.hi < F(1, 3)
    assert 0.335953 < 591 / 1352 and 0.218612 < 5 / 12
    e_cg = epsilon_coeffs(CG, 1)[0]
    e_ug = epsilon_coeffs(UG, 1)[0]
    assert abs(e_cg) < F(591, 1352) and abs(e_ug) < F(5, 12)
    detail(f"c={float(c.midpoint):.6f}, c~={float(ct.midpoint):.6f}, "
           f"computed |eps1| {float(e_cg):.6f} < {591 / 1352:.6f}, {float(e_ug):.6f} < {5 / 12:.6f}")


def test_ac05_route_equivalence(detail):
    start = time.perf_counter()
    for family in SeriesFamily:
        for nu in (F(0), F(1, 2), F(1), F(7, 3), F(10)):
            a = power_sums(family, nu, 8)
            b = power_sums_via_potential(family, nu, 8)
            assert a.values == b.values, (family, nu)
    elapsed = time.perf_counter() - start
    detail(f"6 families x 5 orders, k<=8, exact equality, {elapsed:.2f}s")
    assert elapsed < 5


def test_ac06_oracle_consistency(detail):
    nus = (F(0), F(1, 2), F(1), F(5), F(10), F(50))
    t = {}
    for kind in RadiusKind:
        for nu in nus:
            lo, hi = _oracle_t(kind, nu)
            t[kind, nu] = (lo, hi)
            brs = [euler_rayleigh_bracket(kind, nu, k) for k in range(1, 7)]
            for br in brs:
                assert br.lower < lo and hi < br.upper, (kind.tag, nu, br.k)
            for a, b in zip(brs, brs[1:]):
                assert a.lower < b.lower and b.upper < a.upper, (kind.tag, nu, a.k)
    for nu in nus:
        assert t[UG, nu][1] < t[CG, nu][0]
        assert t[UH, nu][1] < t[CH, nu][0]
    detail("24 oracles inside all k=1..6 brackets; strict nesting; r^uc < r^c")


def test_ac07_mittag_leffler_residual(detail):
    worst = 0.0
    for kind in RadiusKind:
        for nu in (5, 10, 50):
            lo, hi = _oracle_t(kind, nu)
            res = abs(mittag_leffler_residual(kind, nu, (lo + hi) / 2, M=40))
            worst = max(worst, float(res))
            assert res < F(1, 10 ** 8), (kind.tag, nu, float(res))
    detail(f"max |residual| = {worst:.2e}")


def test_ac08_laurent_validity(detail):
    ratios = []
    for k in (1, 2, 3):
        for target, fn in (("eta", laurent_eta), ("theta", laurent_theta)):
            lc = fn(k, 4)
            fam = weierstrass_family(target)
            err = [abs(power_sums(fam, nu, k)[k] - lc.evaluate(nu)) for nu in (100, 200)]
            ratio = err[0] / err[1]
            ratios.append(float(ratio) / 2 ** (k + 4))
            assert ratio >= F(9, 10) * 2 ** (k + 4), (target, k, float(ratio))
    detail(f"min ratio / 2^(k+4) = {min(ratios):.3f}")


def test_ac09_asymptotic_vs_oracle(detail):
    start = time.perf_counter()
    bad = []
    notes = []
    for kind in RadiusKind:
        rel = []
        for nu in (20, 50, 100, 200):
            iv = direct_radius(kind, nu, F(1, 10 ** 12))
            mid = float(iv.midpoint)
            rel.append(abs(asymptotic_radius(kind, nu, 2) - mid) / mid)
        notes.append(f"{kind.tag} {rel[1]:.1e}")
        if rel[1] >= 0.01:
            bad.append(f"{kind.tag} rel {rel[1]:.3f} at nu=50")
        if any(b >= a for a, b in zip(rel, rel[1:])):
            bad.append(f"{kind.tag} not decreasing {[f'{r:.1e}' for r in rel]}")
    elapsed = time.perf_counter() - start
    # informational only: the h-kinds with their own first-order coefficient
    alt = []
    for kind in (CH, UH):
        mid = float(direct_radius(kind, 50, F(1, 10 ** 12)).midpoint)
        alt.append(f"{kind.tag} {abs(asymptotic_radius(kind, 50, 2, convention='consistent') - mid) / mid:.1e}")
    detail(f"{elapsed:.1f}s; rel@50: " + ", ".join(notes) + ("; " + ", ".join(bad) if bad else ""))
    detail("consistent convention rel@50: " + ", ".join(alt))
    assert not bad, bad
    assert elapsed < 60


def test_ac10_uconv_g_upper_bound(detail):
    notes = []
    for nu in (F(1), F(5), F(10)):
        lo, hi = _oracle_t(UG, nu)
        direct = 4 * (nu + 1) * (nu + 2) / (3 * (4 * nu + 9))
        assert euler_rayleigh_bracket(UG, nu, 1).upper == direct
        assert hi < direct
        alt = alt_uconv_g_k1_upper(nu)
        verdict = "valid" if hi < alt else "INVALID"
        notes.append(f"nu={nu}: direct {float(direct):.4f}, alt {float(alt):.4f} {verdict}, "
                     f"alt/direct {float(alt / direct):.3f}")
    detail("; ".join(notes))
