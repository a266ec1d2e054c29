"""Ordinary potential polynomials and the reciprocal-series route to power sums.

``A_{alpha,n}(a_1..a_n)`` is the coefficient of ``z^n`` in
``(1 + sum a_k z^k)^alpha``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactnum import to_rational
from .rayleigh import PowerSums
from .series import SeriesFamily, check_order, series_coefficients


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple:
    """Multiplicity vectors ``(l_1..l_n)`` with ``sum i*l_i = n``, colex order."""
    if n == 0:
        return ((),)
    out = []

    def rec(part: int, remaining: int, mult: list):
        if part == 0:
            if remaining == 0:
                out.append(tuple(mult))
            return
        for count in range(remaining // part + 1):
            mult[part - 1] = count
            rec(part - 1, remaining - count * part, mult)
        mult[part - 1] = 0

    rec(n, n, [0] * n)
    return tuple(out)


def generalized_binomial(alpha, l: int) -> Fraction:
    alpha = to_rational(alpha)
    out = Fraction(1)
    for j in range(l):
        out = out * (alpha - j) / (j + 1)
    return out


@lru_cache(maxsize=None)
def _multinomial(mult: tuple) -> int:
    from math import factorial

    l = sum(mult)
    out = factorial(l)
    for m in mult:
        out //= factorial(m)
    return out


def potential_poly(alpha, a: Sequence, n: int | None = None) -> Fraction:
    """``A_{alpha,n}`` by the partition sum over ``l_1 + 2 l_2 + ... + n l_n = n``.

    ``a`` holds ``a_1, a_2, ...``; ``n`` defaults to ``len(a)``.
    """
    alpha = to_rational(alpha)
    a = [to_rational(x) for x in a]
    if n is None:
        n = len(a)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for mult in partitions(n):
        l = sum(mult)
        term = generalized_binomial(alpha, l) * _multinomial(mult)
        if term == 0:
            continue
        for i, m in enumerate(mult):
            if m:
                term *= a[i] ** m
        total += term
    return total


def potential_poly_recurrence(alpha, a: Sequence, n_max: int) -> list:
    """``A_{alpha,0..n_max}`` from differentiating the generating identity.

    ``f g' = alpha f' g`` with ``g = f^alpha`` gives
    ``n A_n = sum_{k=1}^n ((alpha+1) k - n) a_k A_{n-k}``.
    """
    alpha = to_rational(alpha)
    a = [Fraction(0)] + [to_rational(x) for x in a]
    A = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for k in range(1, min(n, len(a) - 1) + 1):
            acc += ((alpha + 1) * k - n) * a[k] * A[n - k]
        A.append(acc / n)
    return A


def reciprocal_series(kappa: Sequence, M: int) -> list:
    """Coefficients of ``1 / (1 + sum kappa_n t^n)`` through order M."""
    k = [Fraction(1)] + [to_rational(x) for x in kappa]
    pi = [Fraction(1)]
    for m in range(1, M + 1):
        acc = Fraction(0)
        for j in range(1, min(m, len(k) - 1) + 1):
            acc -= k[j] * pi[m - j]
        pi.append(acc)
    return pi


def pi_coeffs(kappa: Sequence, M: int) -> list:
    """``pi_0..pi_M`` with ``pi_m = sum_p (-1)^p kappa_1^p A_{p,m-p}(f)``, ``f_n = kappa_{n+1}/kappa_1``.

    ``kappa`` is ``kappa_1, kappa_2, ...`` (``kappa_0 = 1`` implied).
    """
    kappa = [to_rational(x) for x in kappa]
    if M == 0:
        return [Fraction(1)]
    if not kappa or kappa[0] == 0:
        return reciprocal_series(kappa, M)
    k1 = kappa[0]
    f = [kappa[n] / k1 for n in range(1, len(kappa))]
    f += [Fraction(0)] * max(0, M - len(f))
    pi = [Fraction(1)]
    for m in range(1, M + 1):
        acc = Fraction(0)
        for p in range(1, m + 1):
            acc += (-1) ** p * k1 ** p * potential_poly(p, f[: m - p], m - p)
        pi.append(acc)
    return pi


def derivative_coeffs(family: SeriesFamily, nu, count: int) -> list:
    """Numerator sequence of the logarithmic derivative.

    ``xi_n = w (n+1) c_{n+1}``, where ``w`` is 2 for series in ``z**2``
    (derivative taken in z) and 1 otherwise.
    """
    c = series_coefficients(family, nu, count + 1)
    w = family.log_derivative_weight
    return [w * (n + 1) * c[n + 1] for n in range(count)]


def power_sums_via_potential(family: SeriesFamily, nu, K: int) -> PowerSums:
    """Power sums from ``-w S_{n+1} = sum_{m<=n} pi_m xi_{n-m}``."""
    nu = check_order(nu)
    c = series_coefficients(family, nu, K + 1)
    pi = pi_coeffs(c[1:], K - 1)
    xi = derivative_coeffs(family, nu, K)
    w = family.log_derivative_weight
    S = []
    for n in range(K):
        conv = sum((pi[m] * xi[n - m] for m in range(n + 1)), Fraction(0))
        S.append(-conv / w)
    return PowerSums(family, nu, tuple(S))
