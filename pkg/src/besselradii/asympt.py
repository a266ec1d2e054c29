"""Large-order expansions of the four radii.

Writing the radius (squared radius for the g-kinds) as ``nu * X(1/nu)`` with
``X(s) = lead + sum eps_n s^n``, the Mittag-Leffler identity at the radius
becomes

    1/W = sum_{j>=1} X(s)^j L^(j)(s),    L^(j)(s) = sum_n L_n^(j) s^n,

where ``L_n^(j)`` are the Laurent coefficients of the Weierstrass Rayleigh
sums (eta for g, theta for h) and ``W`` is the kind's weight. Order ``s^0``
fixes the leading constant as the root of a polynomial once the ``j``-sum is
truncated at ``M + 1``; each higher order is linear in the next ``eps``.

Two conventions are offered for the ``j = 1`` term:

``"shared"``
    The first-order coefficient is taken as ``3/4 (-1)^n`` for every kind.
    For the g-kinds this is exact. For the h-kinds it gives the constants
    1.17157 / 0.627719, which solve a different equation from the radius's
    own (theta's first coefficient is 1/2, not 3/4).
``"consistent"``
    The first-order coefficient is the actual ``L_n^(1)`` of eta or theta. The
    constants then track the directly computed radii for every kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import BracketInvalid, NegativeArgument
from .exactnum import (
    CertifiedInterval,
    RationalPolynomial,
    bisect_smallest_root,
    root_bounds,
    round_to_grid,
    to_rational,
)
from .potpoly import potential_poly_recurrence
from .radii import RadiusKind
from .rayleigh import laurent_table, newton_power_sums

CONVENTIONS = ("shared", "consistent")
DEFAULT_TRUNCATION = 20
EPS_GRID = 2 ** 160


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")


def front_factor(kind: RadiusKind) -> Fraction:
    """Left-hand constant 1/W of the master equation: 1/2, 1, 1/4, 1/2."""
    return Fraction(1, kind.weight)


def fixed_point_constant(kind: RadiusKind) -> Fraction:
    """Constant term ``4/(3W)`` of the shared-convention fixed-point form: 2/3, 4/3, 1/3, 2/3."""
    return Fraction(4, 3) * front_factor(kind)


def laurent_rows(kind: RadiusKind, J: int, N: int, convention: str = "shared") -> list:
    """``rows[j][n] = L_n^(j)`` for j = 1..J (index 0 unused)."""
    _check_convention(convention)
    table = laurent_table(kind.rayleigh_target, J, N)
    rows = [None] + [list(table[j]) for j in range(1, J + 1)]
    if convention == "shared":
        rows[1] = [Fraction(3, 4) * (-1) ** n for n in range(N + 1)]
    return rows


def fixed_point_polynomial(kind: RadiusKind, M: int, convention: str = "shared") -> RationalPolynomial:
    """``x - K + (1/l1) sum_{m=1}^M x^{m+1} L_0^(m+1)``, with ``K = 1/(W l1)``.

    ``l1`` is the first-order Laurent coefficient (3/4 under the shared
    convention, in which case ``K`` is :func:`fixed_point_constant`).
    """
    if M < 1:
        raise ValueError("truncation M must be at least 1")
    rows = laurent_rows(kind, M + 1, 0, convention)
    l1 = rows[1][0]
    coeffs = [-front_factor(kind) / l1, Fraction(1)]
    coeffs += [rows[m + 1][0] / l1 for m in range(1, M + 1)]
    return RationalPolynomial(coeffs)


def fixed_point_residual(kind: RadiusKind, x, M: int, convention: str = "shared") -> Fraction:
    return fixed_point_polynomial(kind, M, convention)(to_rational(x))


def limit_power_sums(family, K: int) -> list:
    """``lim nu^k S_k(nu)`` for k = 1..K, from the nu -> infinity coefficients."""
    coeffs = [Fraction(1)]
    for n in range(1, K + 1):
        coeffs.append(coeffs[-1] * -1 / (4 * n))
    P = family.numerator_rule
    coeffs = [c * P(n) if n else c for n, c in enumerate(coeffs)]
    return newton_power_sums(coeffs, K)


def er_limit_bracket(kind: RadiusKind, k: int) -> CertifiedInterval:
    """Large-nu limit of the order-k Euler-Rayleigh bracket, divided by nu.

    For conv-g with k=2 this is ``(sqrt(2/7), 7/13)``; for uconv-g with k=1
    it is ``(4/15, 1/3)``.
    """
    s = limit_power_sums(kind.critical_family, k + 1)
    lower = root_bounds(1 / s[k - 1], k)[0]
    return CertifiedInterval(lower, s[k - 1] / s[k])


# Order of the limit bracket used to start the leading-constant search.
_BRACKET_ORDER = {
    RadiusKind.CONV_G: 2,
    RadiusKind.UCONV_G: 1,
    RadiusKind.CONV_H: 1,
    RadiusKind.UCONV_H: 1,
}


@dataclass
class LeadingSolve:
    interval: CertifiedInterval
    bracket: CertifiedInterval
    truncation_error: Fraction
    warnings: list = field(default_factory=list)


def _poly_sign(poly: RationalPolynomial):
    def oracle(x):
        v = poly(x)
        return (v > 0) - (v < 0)

    return oracle


def _solve_leading(kind, M, width_goal, convention) -> LeadingSolve:
    poly = fixed_point_polynomial(kind, M, convention)
    bracket = er_limit_bracket(kind, _BRACKET_ORDER[kind])
    warnings = []
    try:
        iv = bisect_smallest_root(_poly_sign(poly), bracket, width_goal)
    except BracketInvalid:
        if convention != "shared":
            raise
        warnings.append(
            f"{kind.tag}: the shared-convention constant lies outside the large-order "
            f"Euler-Rayleigh bracket ({float(bracket.lo):.6f}, {float(bracket.hi):.6f}); "
            "solved on (0, 2) instead"
        )
        bracket = CertifiedInterval(0, 2)
        iv = bisect_smallest_root(_poly_sign(poly), bracket, width_goal)
    # geometric estimate of the dropped terms x^{m+1} L_0^(m+1), m > M
    rows = laurent_rows(kind, M + 3, 0, convention)
    x = bracket.hi if bracket.hi < 2 else iv.hi
    t1 = abs(rows[M + 2][0]) * x ** (M + 2)
    t2 = abs(rows[M + 3][0]) * x ** (M + 3)
    q = t2 / t1 if t1 else Fraction(0)
    tail = t1 / (1 - q) if q < 1 else t1
    slope = abs(poly.derivative()(iv.midpoint)) or Fraction(1)
    return LeadingSolve(iv, bracket, tail / (slope * rows[1][0]), warnings)


def leading_constant(
    kind: RadiusKind,
    M: int = DEFAULT_TRUNCATION,
    width_goal=Fraction(1, 10 ** 12),
    convention: str = "shared",
) -> CertifiedInterval:
    """Root of the truncated fixed-point polynomial, enclosed to ``width_goal``.

    The enclosure is certified for the degree ``M+1`` polynomial; the effect
    of the truncation is reported separately by :func:`asymptotic_expansion`.
    """
    _check_convention(convention)
    return _leading_cached(kind, M, to_rational(width_goal), convention).interval


@lru_cache(maxsize=None)
def _leading_cached(kind, M, width_goal, convention) -> LeadingSolve:
    return _solve_leading(kind, M, width_goal, convention)


def _solve_eps(kind, lead: Fraction, N: int, M: int, convention: str) -> list:
    """eps_1..eps_N for a given (rational) leading constant."""
    J = M + 1
    rows = laurent_rows(kind, J, N, convention)
    denom = sum((j * lead ** (j - 1) * rows[j][0] for j in range(1, J + 1)), Fraction(0))
    eps = []
    for q in range(1, N + 1):
        a = [e / lead for e in eps] + [Fraction(0)]  # eps_q provisionally 0
        residual = Fraction(0)
        for j in range(1, J + 1):
            A = potential_poly_recurrence(j, a, q)
            cj = lead ** j
            for k in range(q + 1):
                residual += cj * A[k] * rows[j][q - k]
        eps.append(round_to_grid(-residual / denom, EPS_GRID))
    return eps


@dataclass(frozen=True)
class AsymptoticExpansion:
    kind: RadiusKind
    leading: CertifiedInterval
    eps: tuple  # eps_1..eps_N (rationals)
    eps_uncertainty: tuple
    truncation: int
    front_factor: Fraction
    convention: str
    leading_truncation_error: Fraction
    warnings: tuple = ()

    def value(self, nu, n_terms: int) -> Fraction:
        """``lead + sum_{n < n_terms} eps_n / nu^n`` (exact in the stored rationals)."""
        nu = to_rational(nu)
        if n_terms - 1 > len(self.eps):
            raise ValueError(f"only {len(self.eps) + 1} terms available")
        out = self.leading.midpoint
        for n in range(1, n_terms):
            out += self.eps[n - 1] / nu ** n
        return out


def asymptotic_expansion(
    kind: RadiusKind,
    N: int = 2,
    M: int = DEFAULT_TRUNCATION,
    convention: str = "shared",
) -> AsymptoticExpansion:
    _check_convention(convention)
    if N > 10:
        raise ValueError("eps_n is provided for n <= 10")
    return _expansion_cached(kind, N, M, convention)


@lru_cache(maxsize=None)
def _expansion_cached(kind, N, M, convention) -> AsymptoticExpansion:
    solve = _leading_cached(kind, M, Fraction(1, 10 ** 12), convention)
    iv = solve.interval
    mid = _solve_eps(kind, iv.midpoint, N, M, convention)
    spread = [Fraction(0)] * N
    for end in (iv.lo, iv.hi):
        other = _solve_eps(kind, end, N, M, convention)
        spread = [max(s, abs(o - m)) for s, o, m in zip(spread, other, mid)]
    # truncation effect: re-solve with M + 5
    iv5 = _leading_cached(kind, M + 5, Fraction(1, 10 ** 12), convention).interval
    more = _solve_eps(kind, iv5.midpoint, N, M + 5, convention)
    unc = tuple(s + abs(o - m) + Fraction(1, EPS_GRID) for s, o, m in zip(spread, more, mid))
    return AsymptoticExpansion(
        kind=kind,
        leading=iv,
        eps=tuple(mid),
        eps_uncertainty=unc,
        truncation=M,
        front_factor=front_factor(kind),
        convention=convention,
        leading_truncation_error=solve.truncation_error,
        warnings=tuple(solve.warnings),
    )


def epsilon_coeffs(kind: RadiusKind, N: int, M: int = DEFAULT_TRUNCATION, convention: str = "shared") -> list:
    return list(asymptotic_expansion(kind, N, M, convention).eps)


def asymptotic_radius(
    kind: RadiusKind,
    nu,
    n_terms: int = 2,
    M: int = DEFAULT_TRUNCATION,
    convention: str = "shared",
) -> float:
    """Radius from the first ``n_terms`` terms of the expansion.

    g-kinds return ``sqrt(nu * X)``, h-kinds ``nu * X``.
    """
    nu = to_rational(nu)
    if nu <= 0:
        raise ValueError("nu must be positive")
    if n_terms < 1:
        raise ValueError("n_terms must be at least 1")
    exp = asymptotic_expansion(kind, max(n_terms - 1, 1), M, convention)
    scaled = nu * exp.value(nu, n_terms)
    if scaled <= 0:
        raise NegativeArgument(f"truncated expansion is non-positive at nu={nu}")
    return math.sqrt(scaled) if kind.squared else float(scaled)
