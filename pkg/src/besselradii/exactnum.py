"""Exact rational substrate: polynomials, certified intervals, root isolation.

Rational numbers are plain :class:`fractions.Fraction` values. They are kept
in lowest terms with a positive denominator by the standard library, which is
exactly the canonical form the rest of the package relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

from .errors import BracketInvalid, ExactDivisionByZero, NoConvergence

Rational = Fraction
RationalLike = Union[Fraction, int, str]

# Sign verdicts: +1, -1, 0, or None for "unknown".
Sign = Optional[int]


def to_rational(value) -> Fraction:
    """Convert ``value`` to an exact rational.

    Strings may be integers, decimals (``"0.25"``, ``"1e-10"``) or ``"p/q"``.
    Floats are converted exactly (their binary value), never rounded.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, float)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def divide(a: RationalLike, b: RationalLike) -> Fraction:
    b = to_rational(b)
    if b == 0:
        raise ExactDivisionByZero(f"division of {a} by zero")
    return to_rational(a) / b


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense univariate polynomial, coefficients lowest degree first."""

    coefficients: tuple

    def __init__(self, coefficients: Iterable[RationalLike]):
        coeffs = [to_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(i * c for i, c in enumerate(self.coefficients) if i)


def poly_eval(p: RationalPolynomial, x: RationalLike) -> Fraction:
    x = to_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class CertifiedInterval:
    """Closed interval ``[lo, hi]`` asserted to contain some real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", to_rational(self.lo))
        object.__setattr__(self, "hi", to_rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: RationalLike) -> "CertifiedInterval":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: RationalLike) -> bool:
        x = to_rational(x)
        return self.lo <= x <= self.hi

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def __contains__(self, x) -> bool:
        return self.contains(x)


def iroot(n: int, k: int) -> int:
    """Floor of the real k-th root of a non-negative integer."""
    if n < 0:
        raise ValueError("iroot of a negative integer")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    # Newton from above on integers.
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def exact_root(x: Fraction, k: int) -> Optional[Fraction]:
    """Return ``x**(1/k)`` if it is rational, else ``None``."""
    x = to_rational(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = iroot(p, k), iroot(q, k)
    if rp ** k == p and rq ** k == q:
        return Fraction(rp, rq)
    return None


def root_bounds(x: RationalLike, k: int, scale: int = 10 ** 30) -> tuple:
    """Rational ``(lo, hi)`` with ``lo <= x**(1/k) <= hi`` and ``hi - lo <= 1/scale``.

    Exact roots come back as ``(r, r)``.
    """
    x = to_rational(x)
    if x < 0:
        raise ValueError("root of a negative number")
    r = exact_root(x, k)
    if r is not None:
        return r, r
    n = (x.numerator * scale ** k) // x.denominator
    f = iroot(n, k)
    return Fraction(f, scale), Fraction(f + 1, scale)


def sqrt_bounds(x: RationalLike, scale: int = 10 ** 30) -> tuple:
    return root_bounds(x, 2, scale)


def bisect_smallest_root(
    sign_oracle: Callable[[Fraction], Sign],
    bracket: CertifiedInterval,
    width_goal: RationalLike,
    max_steps: Optional[int] = None,
) -> CertifiedInterval:
    """Refine a sign-change bracket down to ``width_goal``.

    The oracle may answer ``None`` (unknown). Such midpoints are retried at
    ``mid + w/4``, ``mid - w/4`` and ``mid + w/8``; if all three fail the
    search stops with :class:`NoConvergence`. Each accepted step keeps the
    sub-interval whose endpoint signs still differ, so the returned endpoints
    were all certified by the oracle.
    """
    width_goal = to_rational(width_goal)
    if width_goal <= 0:
        raise ValueError("width_goal must be positive")
    lo, hi = bracket.lo, bracket.hi
    s_lo, s_hi = sign_oracle(lo), sign_oracle(hi)
    if s_lo is None or s_hi is None:
        raise BracketInvalid(f"unknown sign at a bracket endpoint of [{lo}, {hi}]")
    if s_lo == 0:
        return CertifiedInterval(lo, lo)
    if s_hi == 0:
        return CertifiedInterval(hi, hi)
    if s_lo == s_hi:
        raise BracketInvalid(f"no sign change on [{lo}, {hi}] (both {s_lo:+d})")

    if max_steps is None:
        w0 = hi - lo
        ratio = w0 / width_goal
        max_steps = 4 * max(1, math.ceil(math.log2(ratio))) if ratio > 1 else 1

    steps = 0
    while hi - lo > width_goal:
        if steps >= max_steps:
            raise NoConvergence(
                f"width {float(hi - lo):.3g} above goal after {steps} steps"
            )
        steps += 1
        w = hi - lo
        mid = (lo + hi) / 2
        s_mid = sign_oracle(mid)
        for offset in (w / 4, -w / 4, w / 8):
            if s_mid is not None:
                break
            mid = (lo + hi) / 2 + offset
            s_mid = sign_oracle(mid)
        if s_mid is None:
            raise NoConvergence(f"sign undecidable near {float(mid)!r}")
        if s_mid == 0:
            return CertifiedInterval(mid, mid)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return CertifiedInterval(lo, hi)


def round_to_grid(x: Fraction, scale: int, direction: str = "nearest") -> Fraction:
    """Snap ``x`` to the grid ``Z/scale`` (floor, ceil or nearest)."""
    n = x * scale
    if direction == "floor":
        k = math.floor(n)
    elif direction == "ceil":
        k = math.ceil(n)
    else:
        k = round(n)
    return Fraction(k, scale)


def rational_str(x: Fraction) -> str:
    x = to_rational(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_ROUNDING = {"nearest": "ROUND_HALF_EVEN", "floor": "ROUND_FLOOR", "ceil": "ROUND_CEILING"}


def format_decimal(x: RationalLike, digits: int = 10, rounding: str = "nearest") -> str:
    """Decimal string of ``x`` with ``digits`` significant digits.

    ``rounding`` is ``"nearest"`` (half-even, the default), ``"floor"`` or
    ``"ceil"``; the last two give outward-rounded interval endpoints.
    """
    import decimal

    x = to_rational(x)
    if x == 0:
        return "0"
    mode = getattr(decimal, _ROUNDING[rounding])
    ctx = decimal.Context(prec=digits, rounding=mode, Emax=10 ** 6, Emin=-(10 ** 6))
    d = ctx.divide(decimal.Decimal(x.numerator), decimal.Decimal(x.denominator))
    s = format(d, "f") if -30 < d.adjusted() < 30 else format(d, "e")
    return s


def polynomial_from_roots(roots: Sequence[RationalLike]) -> RationalPolynomial:
    coeffs = [Fraction(1)]
    for r in roots:
        r = to_rational(r)
        shifted = [Fraction(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= r * c
        coeffs = shifted
    return RationalPolynomial(coeffs)
