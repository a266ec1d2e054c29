from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from besselradii.errors import OrderOutOfRange, RatioNotSmall
from besselradii.series import (
    SeriesFamily,
    check_order,
    eval_certified,
    map_point,
    pochhammer,
    series_coefficient,
    series_coefficients,
    sign_at,
    tail_bound,
)

WG, WH = SeriesFamily.WEIERSTRASS_G, SeriesFamily.WEIERSTRASS_H


def base_coeffs(nu, count):
    """a_n with g(z) = sum a_n z^(2n+1) and h(z) = sum a_n z^(n+1)."""
    out, a = [], F(1)
    for n in range(count):
        if n:
            a = -a / (4 * n * (nu + n))
        out.append(a)
    return out


def test_check_order():
    assert check_order("1/2") == F(1, 2)
    for bad in (-1, F(-3, 2)):
        with pytest.raises(OrderOutOfRange):
            check_order(bad)


def test_pochhammer():
    assert pochhammer(F(1, 2), 3) == F(1, 2) * F(3, 2) * F(5, 2)
    assert pochhammer(F(7), 0) == 1


@pytest.mark.parametrize("nu", [F(0), F(1, 2), F(3), F(-1, 3)])
def test_families_match_term_by_term_differentiation(nu):
    """Each rule agrees with differentiating g (powers 2n+1) or h (powers n+1)."""
    a = base_coeffs(nu, 12)
    for n in range(12):
        g_pow, h_pow = 2 * n + 1, n + 1
        expected = {
            WG: g_pow * a[n],  # g'
            WH: h_pow * a[n],  # h'
            SeriesFamily.CONVEX_G: g_pow ** 2 * a[n],  # (z g')'
            SeriesFamily.CONVEX_H: h_pow ** 2 * a[n],  # (z h')'
            SeriesFamily.UCONVEX_G: (g_pow + 2 * g_pow * (g_pow - 1)) * a[n],  # g' + 2 z g''
            SeriesFamily.UCONVEX_H: (h_pow + 2 * h_pow * (h_pow - 1)) * a[n],  # h' + 2 z h''
        }
        for fam, value in expected.items():
            assert series_coefficient(fam, n, nu) == value, (fam, n)


def test_coefficient_list_and_tags():
    c = series_coefficients(SeriesFamily.CONVEX_G, F(1), 4)
    assert c == [1, F(-9, 8), F(25, 192), F(-49, 9216)]
    assert SeriesFamily.from_tag("convexh") is SeriesFamily.CONVEX_H
    assert SeriesFamily.from_tag("UCONVEX_G") is SeriesFamily.UCONVEX_G
    with pytest.raises(KeyError):
        SeriesFamily.from_tag("nope")


def direct_sum(family, nu, t, terms=200):
    c = series_coefficients(family, nu, terms)
    return sum((ck * t ** k for k, ck in enumerate(c)), F(0))


@pytest.mark.parametrize("family", list(SeriesFamily))
@pytest.mark.parametrize("nu,t", [(F(0), F(1)), (F(1, 2), F(7, 3)), (F(5), F(20)), (F(50), F(60))])
def test_eval_certified_against_long_sum(family, nu, t):
    tol = F(1, 10 ** 15)
    iv = eval_certified(family, nu, t, tol)
    assert iv.width <= 2 * tol
    assert iv.contains(direct_sum(family, nu, t))


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(list(SeriesFamily)),
    st.fractions(min_value=F(-9, 10), max_value=20, max_denominator=50),
    st.fractions(min_value=0, max_value=10, max_denominator=50),
    st.integers(min_value=5, max_value=30),
)
def test_tail_bound_dominates(family, nu, t, N):
    try:
        bound = tail_bound(family, nu, t, N)
    except RatioNotSmall:
        return
    c = series_coefficients(family, nu, N + 81)
    tail = sum((c[k] * t ** k for k in range(N + 1, N + 81)), F(0))
    assert abs(tail) <= bound


def test_tail_bound_refuses_large_ratio():
    with pytest.raises(RatioNotSmall):
        tail_bound(WG, F(0), F(100), 1)


def test_sign_at():
    assert sign_at(SeriesFamily.CONVEX_G, F(1), F(1, 2)) == 1
    assert sign_at(SeriesFamily.CONVEX_G, F(1), F(3, 2)) == -1
    assert sign_at(WG, F(0), F(0)) == 1
    # (z g_1')' vanishes exactly at z = 1: the sign is never certified there
    assert sign_at(SeriesFamily.CONVEX_G, F(1), F(1), max_effort=8) is None


def _mp_map(which, nu, z):
    nu = mpmath.mpf(nu.numerator) / nu.denominator
    pref = mpmath.power(2, nu) * mpmath.gamma(nu + 1)
    if which == "g":
        return pref * z ** (1 - nu) * mpmath.besselj(nu, z)
    return pref * z ** (1 - nu / 2) * mpmath.besselj(nu, mpmath.sqrt(z))


@pytest.mark.parametrize("which", ["g", "h"])
@pytest.mark.parametrize("nu", [F(0), F(1, 2), F(50)])
@pytest.mark.parametrize("z", [(F(1, 3), F(2, 3)), (F(3), F(-1)), (F(-5, 2), F(1, 4))])
def test_map_point_against_bessel(which, nu, z):
    mpmath.mp.dps = 30
    rect = map_point(which, nu, z, F(1, 10 ** 12))
    ref = _mp_map(which, nu, mpmath.mpc(float(z[0]), float(z[1])))
    assert rect.re.width <= F(2, 10 ** 12) and rect.im.width <= F(2, 10 ** 12)
    assert abs(complex(ref) - rect.midpoint) < 1e-11


def test_map_point_origin_and_complex_input():
    rect = map_point("g", F(2), 0j)
    assert rect.re.contains(0) and rect.im.contains(0)
    a = map_point("h", F(1), complex(0.5, -0.25))
    b = map_point("h", F(1), (F(1, 2), F(-1, 4)))
    assert a == b
    with pytest.raises(ValueError):
        map_point("x", F(1), 1j)
