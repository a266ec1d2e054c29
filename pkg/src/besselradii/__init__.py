"""Radii of convexity and uniform convexity of normalized Bessel functions.

Three routes are provided and cross-checked: certified direct root finding
on the defining series, exact-rational Euler-Rayleigh brackets, and the
large-order asymptotic expansions.
"""

from .asympt import (
    AsymptoticExpansion,
    asymptotic_expansion,
    asymptotic_radius,
    epsilon_coeffs,
    fixed_point_residual,
    leading_constant,
)
from .errors import (
    BesselRadiiError,
    BracketInvalid,
    ConvergenceDomain,
    ExactDivisionByZero,
    NegativeArgument,
    NoConvergence,
    OrderOutOfRange,
    RatioNotSmall,
)
from .exactnum import CertifiedInterval, RationalPolynomial, bisect_smallest_root, to_rational
from .potpoly import pi_coeffs, potential_poly, power_sums_via_potential
from .radii import (
    BoundsBracket,
    RadiusKind,
    compare_report,
    critical_zero,
    direct_radius,
    euler_rayleigh_bracket,
    mittag_leffler_residual,
)
from .rayleigh import laurent_eta, laurent_theta, power_sums
from .series import SeriesFamily, eval_certified, map_point, series_coefficient, sign_at

__version__ = "0.1.0"
