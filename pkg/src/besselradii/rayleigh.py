"""Rayleigh sums and their Laurent expansions in 1/nu.

For a series ``1 + sum c_n t^n`` whose zeros ``t_1 < t_2 < ...`` are all
real and positive, the power sums ``S_k = sum_j t_j^{-k}`` follow from the
Newton identity ``S_k = -k c_k - sum_{i<k} c_i S_{k-i}``.

``eta_k(nu)`` and ``theta_k(nu)`` are the power sums of the g- and h-side
Weierstrass series. Their expansions ``nu^-k * sum_n L_n^(k) nu^-n`` are
built from the expansion of the coefficients themselves: the factor
``1/((1+1/nu)...(1+k/nu))`` contributes ``(-1)^n h_n(1..k)``, with ``h_n`` the
complete homogeneous symmetric polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .series import SeriesFamily, check_order, series_coefficients


@dataclass(frozen=True)
class PowerSums:
    family: SeriesFamily
    nu: Fraction
    values: tuple  # S_1 .. S_K

    def __getitem__(self, k: int) -> Fraction:
        """1-based access: ``sums[k]`` is ``S_k``."""
        if k < 1:
            raise IndexError(k)
        return self.values[k - 1]

    def __len__(self) -> int:
        return len(self.values)


def newton_power_sums(coeffs: Sequence[Fraction], K: int) -> list:
    """Power sums of reciprocal zeros from coefficients ``c_0 = 1, c_1, ...``."""
    S = [Fraction(0)] * (K + 1)
    for k in range(1, K + 1):
        acc = -k * coeffs[k]
        for i in range(1, k):
            acc -= coeffs[i] * S[k - i]
        S[k] = acc
    return S[1:]


def power_sums(family: SeriesFamily, nu, K: int) -> PowerSums:
    nu = check_order(nu)
    if K < 1:
        raise ValueError("K must be at least 1")
    return _power_sums_cached(family, nu, K)


@lru_cache(maxsize=512)
def _power_sums_cached(family: SeriesFamily, nu: Fraction, K: int) -> PowerSums:
    coeffs = series_coefficients(family, nu, K + 1)
    return PowerSums(family, nu, tuple(newton_power_sums(coeffs, K)))


@lru_cache(maxsize=None)
def _homogeneous_table(k_max: int, n_max: int) -> tuple:
    """``table[k][n] = h_n(1, ..., k)`` via h_n(1..k) = h_n(1..k-1) + k h_{n-1}(1..k)."""
    table = [[Fraction(1)] + [Fraction(0)] * n_max]
    for k in range(1, k_max + 1):
        row = [Fraction(1)]
        prev = table[k - 1]
        for n in range(1, n_max + 1):
            row.append(prev[n] + k * row[n - 1])
        table.append(row)
    return tuple(tuple(r) for r in table)


def complete_homogeneous(k: int, n: int) -> Fraction:
    return _homogeneous_table(k, n)[k][n]


def _leading(k: int, numerator: int) -> Fraction:
    fact = 1
    for j in range(2, k + 1):
        fact *= j
    return Fraction((-1) ** k * numerator, 4 ** k * fact)


def laurent_a_coeffs(k: int, N: int) -> list:
    if k < 1:
        raise ValueError("k must be at least 1")
    a0 = _leading(k, 2 * k + 1)
    row = _homogeneous_table(k, N)[k]
    return [a0 * (-1) ** n * row[n] for n in range(N + 1)]


def laurent_b_coeffs(k: int, N: int) -> list:
    if k < 1:
        raise ValueError("k must be at least 1")
    b0 = _leading(k, k + 1)
    row = _homogeneous_table(k, N)[k]
    return [b0 * (-1) ** n * row[n] for n in range(N + 1)]


@dataclass(frozen=True)
class LaurentCoeffs:
    """Coefficients of ``sum_n coeffs[n] / nu^(k+n)``."""

    k: int
    target: str  # "eta" or "theta"
    coeffs: tuple

    def evaluate(self, nu) -> Fraction:
        nu = Fraction(nu)
        return sum((c / nu ** (self.k + n) for n, c in enumerate(self.coeffs)), Fraction(0))


@lru_cache(maxsize=None)
def _laurent_table(target: str, K: int, N: int) -> tuple:
    """Rows ``L[k][n]`` for k = 1..K, n = 0..N by the double recurrence."""
    coeff_fn = laurent_a_coeffs if target == "eta" else laurent_b_coeffs
    a = [None] + [coeff_fn(k, N) for k in range(1, K + 1)]
    L = [None]
    for k in range(1, K + 1):
        row = []
        for n in range(N + 1):
            acc = -k * a[k][n]
            for m in range(n + 1):
                for i in range(1, k):
                    acc -= a[i][m] * L[k - i][n - m]
            row.append(acc)
        L.append(row)
    return tuple(tuple(r) if r is not None else None for r in L)


def laurent_table(target: str, K: int, N: int) -> tuple:
    if target not in ("eta", "theta"):
        raise ValueError(f"target must be 'eta' or 'theta', got {target!r}")
    return _laurent_table(target, K, N)


def laurent_eta(k: int, N: int) -> LaurentCoeffs:
    if k < 1:
        raise ValueError("k must be at least 1")
    return LaurentCoeffs(k, "eta", laurent_table("eta", k, N)[k])


def laurent_theta(k: int, N: int) -> LaurentCoeffs:
    if k < 1:
        raise ValueError("k must be at least 1")
    return LaurentCoeffs(k, "theta", laurent_table("theta", k, N)[k])


def weierstrass_family(target: str) -> SeriesFamily:
    return SeriesFamily.WEIERSTRASS_G if target == "eta" else SeriesFamily.WEIERSTRASS_H
