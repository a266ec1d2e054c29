"""Power series attached to the normalized Bessel functions.

Every family has the shape

    1 + sum_{n>=1} (-1)^n P(n) t^n / (4^n n! (nu+1)_n)

for a family-specific polynomial ``P``. The g-families are series in
``t = z**2``, the h-families in ``t = z``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .errors import OrderOutOfRange, RatioNotSmall
from .exactnum import CertifiedInterval, Sign, sqrt_bounds, to_rational


class VariableKind(enum.Enum):
    SQUARED = "squared"  # series in t = z**2
    PLAIN = "plain"  # series in t = z


class SeriesFamily(enum.Enum):
    """The six concrete series and their numerator rules ``P(n)``."""

    WEIERSTRASS_G = ("WeierstrassG", (lambda n: 2 * n + 1), VariableKind.SQUARED)
    WEIERSTRASS_H = ("WeierstrassH", (lambda n: n + 1), VariableKind.PLAIN)
    CONVEX_G = ("ConvexG", (lambda n: (2 * n + 1) ** 2), VariableKind.SQUARED)
    CONVEX_H = ("ConvexH", (lambda n: (n + 1) ** 2), VariableKind.PLAIN)
    UCONVEX_G = ("UConvexG", (lambda n: (2 * n + 1) * (4 * n + 1)), VariableKind.SQUARED)
    UCONVEX_H = ("UConvexH", (lambda n: (n + 1) * (2 * n + 1)), VariableKind.PLAIN)

    def __init__(self, tag: str, rule: Callable[[int], int], variable_kind: VariableKind):
        self.tag = tag
        self.numerator_rule = rule
        self.variable_kind = variable_kind

    @property
    def squared(self) -> bool:
        return self.variable_kind is VariableKind.SQUARED

    @property
    def log_derivative_weight(self) -> int:
        """2 for series in z**2 (chain rule factor), 1 otherwise."""
        return 2 if self.squared else 1

    @classmethod
    def from_tag(cls, tag: str) -> "SeriesFamily":
        for fam in cls:
            if fam.tag.lower() == tag.lower() or fam.name.lower() == tag.lower():
                return fam
        raise KeyError(tag)


def _ratio_is_decreasing(family: SeriesFamily, upto: int = 400) -> bool:
    P = family.numerator_rule
    ratios = [Fraction(P(n + 1), P(n)) for n in range(upto)]
    return all(a >= b for a, b in zip(ratios, ratios[1:]))


# The geometric tail bound needs P(n+1)/P(n) non-increasing.
for _fam in SeriesFamily:
    assert _ratio_is_decreasing(_fam), _fam


def check_order(nu) -> Fraction:
    nu = to_rational(nu)
    if nu <= -1:
        raise OrderOutOfRange(f"order nu={nu} must exceed -1")
    return nu


def pochhammer(a: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for j in range(n):
        out *= a + j
    return out


def series_coefficient(family: SeriesFamily, n: int, nu) -> Fraction:
    nu = check_order(nu)
    if n < 0:
        raise ValueError("coefficient index must be non-negative")
    if n == 0:
        return Fraction(1)
    denom = 4 ** n * _factorial(n) * pochhammer(nu + 1, n)
    return Fraction((-1) ** n * family.numerator_rule(n)) / denom


def series_coefficients(family: SeriesFamily, nu, count: int) -> list:
    """Coefficients ``c_0 .. c_{count-1}`` computed incrementally."""
    nu = check_order(nu)
    P = family.numerator_rule
    out = [Fraction(1)]
    base = Fraction(1)  # 1 / (4^n n! (nu+1)_n)
    for n in range(1, count):
        base = base / (4 * n * (nu + n))
        out.append((-1) ** n * P(n) * base)
    return out[:count]


def _factorial(n: int) -> int:
    out = 1
    for j in range(2, n + 1):
        out *= j
    return out


def ratio_bound(family: SeriesFamily, nu: Fraction, t: Fraction, N: int) -> Fraction:
    """Upper bound on |term_{n+1} / term_n| for every n >= N."""
    P = family.numerator_rule
    return t * P(N + 1) / (4 * P(N) * (N + 1) * (nu + N + 1))


def tail_bound(family: SeriesFamily, nu, t, N: int) -> Fraction:
    """Bound on |sum_{n>N} c_n t^n| by a geometric majorant.

    Raises :class:`RatioNotSmall` when the ratio bound at ``N`` exceeds 1/2.
    """
    nu = check_order(nu)
    t = to_rational(t)
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return Fraction(0)
    q = ratio_bound(family, nu, t, N)
    if q > Fraction(1, 2):
        raise RatioNotSmall(f"term ratio {float(q):.3g} > 1/2 at N={N}")
    c_next = abs(series_coefficient(family, N + 1, nu))
    return c_next * t ** (N + 1) / (1 - q)


class _PartialSums:
    """Incremental evaluation state for one (family, nu, t).

    Keeps the running partial sum and the last term so that tightening the
    tolerance only costs the additional terms.
    """

    def __init__(self, family: SeriesFamily, nu: Fraction, t: Fraction):
        self.family, self.nu, self.t = family, nu, t
        self.N = 0
        self.term = Fraction(1)  # c_N t^N
        self.partial = Fraction(1)

    def advance_to(self, N: int) -> None:
        P = self.family.numerator_rule
        while self.N < N:
            n = self.N + 1
            self.term = -self.term * self.t * P(n) / (P(n - 1) * 4 * n * (self.nu + n))
            self.partial += self.term
            self.N = n

    def bound(self) -> Optional[Fraction]:
        """Tail bound after the current N, or None if the ratio test fails."""
        if self.t == 0:
            return Fraction(0)
        q = ratio_bound(self.family, self.nu, self.t, self.N)
        if q > Fraction(1, 2):
            return None
        P = self.family.numerator_rule
        n = self.N + 1
        nxt = abs(self.term) * self.t * P(n) / (P(n - 1) * 4 * n * (self.nu + n))
        return nxt / (1 - q)

    def enclose(self, abs_tol: Fraction) -> CertifiedInterval:
        N = max(self.N, 1)
        while True:
            self.advance_to(N)
            B = self.bound()
            if B is not None and B <= abs_tol:
                return CertifiedInterval(self.partial - B, self.partial + B)
            N *= 2


def eval_certified(family: SeriesFamily, nu, t, abs_tol) -> CertifiedInterval:
    """Certified enclosure of the series at ``t >= 0`` with radius at most ``abs_tol``."""
    nu = check_order(nu)
    t = to_rational(t)
    abs_tol = to_rational(abs_tol)
    if t < 0:
        raise ValueError("t must be non-negative")
    if abs_tol <= 0:
        raise ValueError("abs_tol must be positive")
    return _PartialSums(family, nu, t).enclose(abs_tol)


def sign_at(family: SeriesFamily, nu, t, max_effort: int = 60) -> Sign:
    """Certified sign of the series at ``t``; ``None`` when undecided.

    Tolerances start at 1e-4 and halve per attempt.
    """
    nu = check_order(nu)
    t = to_rational(t)
    state = _PartialSums(family, nu, t)
    tol = Fraction(1, 10 ** 4)
    for _ in range(max_effort):
        iv = state.enclose(tol)
        if iv.lo == iv.hi == 0:
            return 0
        if iv.lo > 0:
            return 1
        if iv.hi < 0:
            return -1
        tol /= 2
    return None


@dataclass(frozen=True)
class ComplexRect:
    """Rectangle enclosure ``[re_lo, re_hi] x [im_lo, im_hi]``."""

    re: CertifiedInterval
    im: CertifiedInterval

    @property
    def midpoint(self) -> complex:
        return complex(float(self.re.midpoint), float(self.im.midpoint))


def map_point(which: str, nu, z, abs_tol=Fraction(1, 10 ** 8)) -> ComplexRect:
    """Enclose g_nu(z) or h_nu(z) for complex ``z`` with rational parts.

    ``z`` is a pair ``(re, im)`` of rationals or a Python complex (converted
    exactly). Both maps are ``z * F(w)`` with ``F(w) = sum (-1)^n w^n /
    (4^n n! (nu+1)_n)`` and ``w = z**2`` for g, ``w = z`` for h.
    """
    nu = check_order(nu)
    abs_tol = to_rational(abs_tol)
    if isinstance(z, complex):
        zr, zi = Fraction(z.real), Fraction(z.imag)
    else:
        zr, zi = to_rational(z[0]), to_rational(z[1])
    if which == "g":
        wr, wi = zr * zr - zi * zi, 2 * zr * zi
    elif which == "h":
        wr, wi = zr, zi
    else:
        raise ValueError(f"unknown map {which!r}")

    mod2_z = zr * zr + zi * zi
    if mod2_z == 0:
        zero = CertifiedInterval(0, 0)
        return ComplexRect(zero, zero)
    z_abs_hi = sqrt_bounds(mod2_z, 2 ** 64)[1]
    w_abs_hi = mod2_z if which == "g" else z_abs_hi

    # partial sum of F(w), exact complex arithmetic on (re, im) pairs
    sr, si = Fraction(1), Fraction(0)
    tr, ti = Fraction(1), Fraction(0)
    n = 0
    mag = Fraction(1)  # |c_n| * w_abs_hi^n
    while True:
        n += 1
        k = 4 * n * (nu + n)
        tr, ti = -(tr * wr - ti * wi) / k, -(tr * wi + ti * wr) / k
        sr += tr
        si += ti
        mag = mag * w_abs_hi / k
        q = w_abs_hi / (4 * (n + 1) * (nu + n + 1))
        if q <= Fraction(1, 2):
            B = z_abs_hi * mag * q / (1 - q)
            if B <= abs_tol:
                break
    re = zr * sr - zi * si
    im = zr * si + zi * sr
    return ComplexRect(CertifiedInterval(re - B, re + B), CertifiedInterval(im - B, im + B))
