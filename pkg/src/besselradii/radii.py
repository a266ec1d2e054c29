"""Radii of convexity and uniform convexity: direct, bracketed, and checked.

Each radius is the smallest positive zero of a critical series. For the
g-kinds the series variable is ``t = z**2`` and the radius is ``sqrt(t*)``;
for the h-kinds the radius is ``t*`` itself.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import BracketInvalid, ConvergenceDomain
from .exactnum import (
    CertifiedInterval,
    bisect_smallest_root,
    root_bounds,
    sqrt_bounds,
    to_rational,
)
from .rayleigh import power_sums
from .series import SeriesFamily, check_order, sign_at

ROOT_SCALE = 10 ** 30


class RadiusKind(enum.Enum):
    CONV_G = ("conv-g", SeriesFamily.CONVEX_G, SeriesFamily.WEIERSTRASS_G, 2)
    CONV_H = ("conv-h", SeriesFamily.CONVEX_H, SeriesFamily.WEIERSTRASS_H, 1)
    UCONV_G = ("uconv-g", SeriesFamily.UCONVEX_G, SeriesFamily.WEIERSTRASS_G, 4)
    UCONV_H = ("uconv-h", SeriesFamily.UCONVEX_H, SeriesFamily.WEIERSTRASS_H, 2)

    def __init__(self, tag, critical_family, weierstrass_family, weight):
        self.tag = tag
        self.critical_family = critical_family
        self.weierstrass_family = weierstrass_family
        # W in  1 = W * sum_{m>=1} r^m S_m  at the radius
        self.weight = weight

    @property
    def squared(self) -> bool:
        return self.critical_family.squared

    @property
    def base(self) -> str:
        return "g" if self.squared else "h"

    @property
    def rayleigh_target(self) -> str:
        return "eta" if self.squared else "theta"

    @property
    def uniform(self) -> bool:
        return self.tag.startswith("u")

    @classmethod
    def from_tag(cls, tag: str) -> "RadiusKind":
        for kind in cls:
            if kind.tag == tag:
                return kind
        raise KeyError(tag)


@dataclass(frozen=True)
class BoundsBracket:
    """Euler-Rayleigh bracket ``S_k^{-1/k} < t* < S_k / S_{k+1}``.

    Values are in the series variable (squared radius for g-kinds).
    ``lower_power`` is ``1/S_k`` exactly, i.e. the k-th power of the true
    lower bound; ``lower`` is that bound rounded down to a rational.
    """

    kind: RadiusKind
    nu: Fraction
    k: int
    lower: Fraction
    upper: Fraction
    lower_power: Fraction

    @property
    def exact_lower(self) -> bool:
        return self.lower ** self.k == self.lower_power


def euler_rayleigh_bracket(kind: RadiusKind, nu, k: int) -> BoundsBracket:
    nu = check_order(nu)
    if k < 1:
        raise ValueError("k must be at least 1")
    return _bracket(kind, nu, k)


@lru_cache(maxsize=1024)
def _bracket(kind: RadiusKind, nu: Fraction, k: int) -> BoundsBracket:
    S = power_sums(kind.critical_family, nu, k + 1)
    inv = 1 / S[k]
    lower, _ = root_bounds(inv, k, ROOT_SCALE)
    return BoundsBracket(kind, nu, k, lower, S[k] / S[k + 1], inv)


def critical_zero(kind: RadiusKind, nu, width_goal=Fraction(1, 10 ** 12)) -> CertifiedInterval:
    """Certified enclosure of the smallest zero of the critical series (variable t)."""
    nu = check_order(nu)
    return _critical_zero(kind, nu, to_rational(width_goal))


@lru_cache(maxsize=1024)
def _critical_zero(kind: RadiusKind, nu: Fraction, width_goal: Fraction) -> CertifiedInterval:
    br = euler_rayleigh_bracket(kind, nu, 3)
    family = kind.critical_family

    def oracle(t):
        return sign_at(family, nu, t)

    return bisect_smallest_root(oracle, CertifiedInterval(br.lower, br.upper), width_goal)


def direct_radius(kind: RadiusKind, nu, abs_tol=Fraction(1, 10 ** 12)) -> CertifiedInterval:
    """Certified enclosure of the radius itself (z-units)."""
    nu = check_order(nu)
    abs_tol = to_rational(abs_tol)
    if not kind.squared:
        return critical_zero(kind, nu, abs_tol)
    # d(sqrt t) = dt / (2 sqrt t): a t-width of abs_tol*sqrt(t_lo) leaves room for rounding
    br = euler_rayleigh_bracket(kind, nu, 3)
    s_lo = sqrt_bounds(br.lower, 2 ** 40)[0]
    width_t = abs_tol * s_lo if s_lo > 0 else abs_tol * abs_tol
    t_iv = critical_zero(kind, nu, width_t)
    scale = 4 * (abs_tol.denominator // max(abs_tol.numerator, 1) + 1)
    lo = sqrt_bounds(t_iv.lo, scale)[0]
    hi = sqrt_bounds(t_iv.hi, scale)[1]
    return CertifiedInterval(lo, hi)


def mittag_leffler_residual(kind: RadiusKind, nu, r, M: int = 40) -> Fraction:
    """``1 - W sum_{m=1}^M r^m S_m`` with S the Weierstrass power sums.

    ``r`` is in the series variable (squared radius for g-kinds). The
    geometric rearrangement requires ``r`` below the first Weierstrass zero;
    this is enforced through ``r^2 S_2 < 1``.
    """
    nu = check_order(nu)
    r = to_rational(r)
    if r < 0:
        raise ConvergenceDomain("r must be non-negative")
    S = power_sums(kind.weierstrass_family, nu, max(M, 2))
    if r * r * S[2] >= 1:
        raise ConvergenceDomain(
            f"r={float(r):.6g} is not below the Euler-Rayleigh lower bound of the first zero"
        )
    total = Fraction(0)
    rp = Fraction(1)
    for m in range(1, M + 1):
        rp *= r
        total += rp * S[m]
    return 1 - kind.weight * total


def alt_uconv_g_k1_upper(nu) -> Fraction:
    """The alternative closed form ``4 nu (nu+1) / (3 (4 nu - 1))`` for (r^uc(g))^2."""
    nu = to_rational(nu)
    return 4 * nu * (nu + 1) / (3 * (4 * nu - 1))


@dataclass
class ReportRow:
    kind: RadiusKind
    nu: Fraction
    brackets: list  # BoundsBracket, k = 1..k_max
    oracle: CertifiedInterval  # radius, z-units
    oracle_t: CertifiedInterval  # series variable
    asymptotic: Optional[float]
    abs_gap: Optional[float]
    rel_gap: Optional[float]
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def compare_report(
    kinds: Iterable[RadiusKind],
    nus: Sequence,
    n_terms: int = 2,
    k_max: int = 3,
    abs_tol=Fraction(1, 10 ** 10),
    convention: str = "shared",
) -> list:
    """One row per (kind, nu) tying together brackets, oracle and asymptotics."""
    from .asympt import asymptotic_radius

    kinds = list(kinds)
    rows = []
    oracles = {}
    for kind in kinds:
        for nu in nus:
            nu = check_order(nu)
            brs = [euler_rayleigh_bracket(kind, nu, k) for k in range(1, k_max + 1)]
            rad = direct_radius(kind, nu, abs_tol)
            t_iv = CertifiedInterval(rad.lo ** 2, rad.hi ** 2) if kind.squared else rad
            asym = abs_gap = rel_gap = None
            if nu > 0:
                asym = asymptotic_radius(kind, nu, n_terms, convention=convention)
                mid = float(rad.midpoint)
                abs_gap = abs(asym - mid)
                rel_gap = abs_gap / mid
            checks = {
                "oracle_inside_brackets": all(b.lower < t_iv.lo and t_iv.hi < b.upper for b in brs),
                "brackets_nested": all(
                    a.lower < b.lower and b.upper < a.upper for a, b in zip(brs, brs[1:])
                ),
            }
            row = ReportRow(kind, nu, brs, rad, t_iv, asym, abs_gap, rel_gap, checks)
            rows.append(row)
            oracles[(kind, nu)] = rad
    pairs = [(RadiusKind.UCONV_G, RadiusKind.CONV_G), (RadiusKind.UCONV_H, RadiusKind.CONV_H)]
    for row in rows:
        for uc, c in pairs:
            other = c if row.kind is uc else uc if row.kind is c else None
            if other is None or (other, row.nu) not in oracles:
                continue
            u_iv = row.oracle if row.kind is uc else oracles[(other, row.nu)]
            c_iv = oracles[(other, row.nu)] if row.kind is uc else row.oracle
            row.checks["uniform_below_plain"] = u_iv.hi < c_iv.lo
    return rows
