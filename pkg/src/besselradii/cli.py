"""Command-line front end.

Every subcommand builds an output record ``{command, inputs, results,
warnings}`` where ``results`` is a list of flat rows. Rows render as JSON,
CSV or aligned text.
"""

from __future__ import annotations

import argparse
import cmath
import contextlib
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Optional

from . import asympt, potpoly, radii, rayleigh, series
from .errors import BesselRadiiError
from .exactnum import format_decimal, rational_str, to_rational
from .radii import RadiusKind
from .series import SeriesFamily

KIND_TAGS = [k.tag for k in RadiusKind]
FAMILY_TAGS = [f.tag for f in SeriesFamily]

UCONV_G_K1_NOTE = (
    "uconv-g k=1 upper bound: the directly assembled value is "
    "4(nu+1)(nu+2)/(3(4nu+9)); the alternative closed form "
    "4nu(nu+1)/(3(4nu-1)) is also valid for nu > 1/4 but looser"
)


def _rational_arg(text: str) -> Fraction:
    try:
        return to_rational(text)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"expected an integer, decimal or p/q rational, got {text!r}")


def _positive_rational_arg(text: str) -> Fraction:
    x = _rational_arg(text)
    if x <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return x


def _nu_list_arg(text: str) -> list:
    return [_rational_arg(part) for part in text.split(",") if part.strip()]


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {n}")
    return n


def _radius_source(text: str):
    if text == "oracle":
        return ("oracle", None)
    head, _, tail = text.partition(":")
    if head == "asympt" and tail:
        return ("asympt", _positive_int(tail))
    if head == "explicit" and tail:
        x = _rational_arg(tail)
        if x < 0:
            raise argparse.ArgumentTypeError("explicit radius must be non-negative")
        return ("explicit", x)
    raise argparse.ArgumentTypeError(
        f"radius source must be oracle, asympt:<terms> or explicit:<value>, got {text!r}"
    )


class Renderer:
    def __init__(self, digits: int):
        self.digits = digits

    def dec(self, x, rounding: str = "nearest") -> str:
        return format_decimal(x, self.digits, rounding)

    def unc(self, x) -> str:
        return format_decimal(x, 3, "ceil")

    def interval(self, prefix: str, lo: Fraction, hi: Fraction) -> dict:
        return {
            f"{prefix}_lo": self.dec(lo, "floor"),
            f"{prefix}_hi": self.dec(hi, "ceil"),
            f"{prefix}": self.dec((lo + hi) / 2),
            f"{prefix}_uncertainty": self.unc((hi - lo) / 2),
        }


# subcommand handlers: (args, renderer) -> (inputs, rows, warnings)

def _cmd_radius(args, r: Renderer):
    kind = RadiusKind.from_tag(args.kind)
    iv = radii.direct_radius(kind, args.nu, args.tol)
    row = {"kind": kind.tag, "nu": rational_str(args.nu)}
    row.update(r.interval("radius", iv.lo, iv.hi))
    row["radius_lo_exact"] = rational_str(iv.lo)
    row["radius_hi_exact"] = rational_str(iv.hi)
    inputs = {"kind": kind.tag, "nu": rational_str(args.nu), "tol": rational_str(args.tol)}
    return inputs, [row], []


def _bracket_rows(kind, nu, ks, r: Renderer):
    rows, warnings = [], []
    for k in ks:
        br = radii.euler_rayleigh_bracket(kind, nu, k)
        row = {
            "kind": kind.tag,
            "nu": rational_str(nu),
            "k": k,
            "lower": r.dec(br.lower, "floor"),
            "upper": r.dec(br.upper, "ceil"),
            "lower_pow_k_exact": rational_str(br.lower_power),
            "upper_exact": rational_str(br.upper),
            "lower_uncertainty": "0" if br.exact_lower else r.unc(Fraction(1, radii.ROOT_SCALE)),
            "upper_uncertainty": "0",
        }
        rows.append(row)
        if kind is RadiusKind.UCONV_G and k == 1:
            warnings.append(UCONV_G_K1_NOTE)
    return rows, warnings


def _cmd_bounds(args, r: Renderer):
    kind = RadiusKind.from_tag(args.kind)
    ks = [args.k] if args.k is not None else list(range(1, args.k_max + 1))
    rows, warnings = _bracket_rows(kind, args.nu, ks, r)
    inputs = {"kind": kind.tag, "nu": rational_str(args.nu), "k": ks}
    return inputs, rows, warnings


def _cmd_rayleigh(args, r: Renderer):
    family = SeriesFamily.from_tag(args.family)
    K = args.k
    S = rayleigh.power_sums(family, args.nu, K)
    alt = potpoly.power_sums_via_potential(family, args.nu, K)
    rows = []
    for k in range(1, K + 1):
        rows.append({
            "family": family.tag,
            "nu": rational_str(args.nu),
            "k": k,
            "S_k": r.dec(S[k]),
            "S_k_exact": rational_str(S[k]),
            "routes_agree": S[k] == alt[k],
        })
    inputs = {"family": family.tag, "nu": rational_str(args.nu), "k": K}
    return inputs, rows, []


def _cmd_laurent(args, r: Renderer):
    target = args.family.lower()
    if target not in ("eta", "theta"):
        raise UsageError("--family must be eta or theta for laurent")
    L = rayleigh.laurent_table(target, args.k, args.terms)[args.k]
    rows = [
        {"target": target, "k": args.k, "n": n, "coeff": r.dec(c), "coeff_exact": rational_str(c)}
        for n, c in enumerate(L)
    ]
    inputs = {"family": target, "k": args.k, "terms": args.terms}
    return inputs, rows, []


def _cmd_asympt(args, r: Renderer):
    kind = RadiusKind.from_tag(args.kind)
    n_eps = max(args.terms - 1, 1)
    exp = asympt.asymptotic_expansion(kind, n_eps, args.trunc, args.convention)
    lead = exp.leading
    rows = []
    row = {"name": "leading"}
    row.update(r.interval("value", lead.lo, lead.hi))
    row["truncation_error_estimate"] = r.unc(exp.leading_truncation_error)
    rows.append(row)
    for n, (e, u) in enumerate(zip(exp.eps, exp.eps_uncertainty), start=1):
        if n >= args.terms:
            break
        rows.append({
            "name": f"eps{n}",
            "value": r.dec(e),
            "value_uncertainty": r.unc(u),
        })
    for nu in args.nu or []:
        rows.append({
            "name": f"radius@{rational_str(nu)}",
            "value": r.dec(Fraction(asympt.asymptotic_radius(kind, nu, args.terms, args.trunc, args.convention))),
        })
    inputs = {
        "kind": kind.tag,
        "terms": args.terms,
        "trunc": args.trunc,
        "convention": args.convention,
        "nu": [rational_str(nu) for nu in args.nu or []],
    }
    return inputs, rows, list(exp.warnings)


def _cmd_compare(args, r: Renderer):
    kinds = [RadiusKind.from_tag(t) for t in (args.kind or KIND_TAGS)]
    nus = args.nu or [Fraction(50)]
    report = radii.compare_report(kinds, nus, args.terms, args.k_max, args.tol, args.convention)
    rows, warnings = [], []
    for rep in report:
        row = {"kind": rep.kind.tag, "nu": rational_str(rep.nu)}
        for br in rep.brackets:
            row[f"lower_k{br.k}"] = r.dec(br.lower, "floor")
            row[f"upper_k{br.k}"] = r.dec(br.upper, "ceil")
        row.update(r.interval("oracle", rep.oracle_t.lo, rep.oracle_t.hi))
        row.update(r.interval("radius", rep.oracle.lo, rep.oracle.hi))
        row["asymptotic"] = "" if rep.asymptotic is None else r.dec(Fraction(rep.asymptotic))
        row["abs_gap"] = "" if rep.abs_gap is None else r.dec(Fraction(rep.abs_gap))
        row["rel_gap"] = "" if rep.rel_gap is None else r.dec(Fraction(rep.rel_gap))
        for name, ok in rep.checks.items():
            row[name] = ok
        rows.append(row)
        if rep.kind is RadiusKind.UCONV_G and UCONV_G_K1_NOTE not in warnings:
            warnings.append(UCONV_G_K1_NOTE)
    inputs = {
        "kind": [k.tag for k in kinds],
        "nu": [rational_str(nu) for nu in nus],
        "terms": args.terms,
        "k_max": args.k_max,
        "tol": rational_str(args.tol),
        "convention": args.convention,
    }
    return inputs, rows, warnings


def _cmd_boundary(args, r: Renderer):
    if args.samples < 8:
        raise UsageError("--samples must be at least 8")
    kind = RadiusKind.from_tag(f"{args.kind}-{args.map}")
    source, param = args.radius
    if source == "oracle":
        radius = radii.direct_radius(kind, args.nu, Fraction(1, 10 ** 12)).midpoint
    elif source == "asympt":
        radius = Fraction(asympt.asymptotic_radius(kind, args.nu, param, convention=args.convention))
    else:
        radius = param
    rows = []
    for i in range(args.samples):
        theta = 2 * math.pi * i / args.samples
        z = complex(radius) * cmath.exp(1j * theta)
        z = (Fraction(z.real), Fraction(z.imag)) if radius else (Fraction(0), Fraction(0))
        rect = series.map_point(args.map, args.nu, z, Fraction(1, 10 ** 8))
        re, im = rect.re.midpoint, rect.im.midpoint
        rows.append({"theta": repr(theta), "re": r.dec(re), "im": r.dec(im)})
    inputs = {
        "map": args.map,
        "kind": kind.tag,
        "nu": rational_str(args.nu),
        "radius_source": source if param is None else f"{source}:{param}",
        "radius": r.dec(Fraction(radius)),
        "samples": args.samples,
    }
    return inputs, rows, []


class UsageError(Exception):
    pass


def _add_common(p: argparse.ArgumentParser, default_format: str = "json") -> None:
    p.add_argument("--format", choices=["json", "csv", "text"], default=default_format)
    p.add_argument("--digits", type=_positive_int, default=10)
    p.add_argument("--out", default=None, help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="besselradii",
        description="Radii of convexity and uniform convexity of normalized Bessel functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="certified radius from the series")
    p.add_argument("--kind", choices=KIND_TAGS, required=True)
    p.add_argument("--nu", type=_rational_arg, required=True)
    p.add_argument("--tol", type=_positive_rational_arg, default=Fraction(1, 10 ** 12))
    _add_common(p)
    p.set_defaults(handler=_cmd_radius)

    p = sub.add_parser("bounds", help="Euler-Rayleigh brackets (series variable)")
    p.add_argument("--kind", choices=KIND_TAGS, required=True)
    p.add_argument("--nu", type=_rational_arg, required=True)
    p.add_argument("--k", type=_positive_int, default=None, help="single order")
    p.add_argument("--k-max", type=_positive_int, default=3)
    _add_common(p)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("rayleigh", help="exact power sums of reciprocal zeros")
    p.add_argument("--family", type=str.lower, choices=[t.lower() for t in FAMILY_TAGS], required=True)
    p.add_argument("--nu", type=_rational_arg, required=True)
    p.add_argument("--k", type=_positive_int, default=4, help="highest order")
    _add_common(p)
    p.set_defaults(handler=_cmd_rayleigh)

    p = sub.add_parser("laurent", help="Laurent coefficients of eta_k / theta_k")
    p.add_argument("--family", choices=["eta", "theta"], required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--terms", type=int, default=4, help="highest index n")
    _add_common(p)
    p.set_defaults(handler=_cmd_laurent)

    p = sub.add_parser("asympt", help="large-order expansion")
    p.add_argument("--kind", choices=KIND_TAGS, required=True)
    p.add_argument("--terms", type=_positive_int, default=2)
    p.add_argument("--trunc", type=_positive_int, default=asympt.DEFAULT_TRUNCATION)
    p.add_argument("--convention", choices=asympt.CONVENTIONS, default="shared")
    p.add_argument("--nu", type=_nu_list_arg, default=None, help="comma-separated orders to evaluate at")
    _add_common(p)
    p.set_defaults(handler=_cmd_asympt)

    p = sub.add_parser("compare", help="brackets, oracle and asymptotics side by side")
    p.add_argument("--kind", choices=KIND_TAGS, action="append")
    p.add_argument("--nu", type=_nu_list_arg, default=None, help="comma-separated orders")
    p.add_argument("--terms", type=_positive_int, default=2)
    p.add_argument("--k-max", type=_positive_int, default=3)
    p.add_argument("--tol", type=_positive_rational_arg, default=Fraction(1, 10 ** 10))
    p.add_argument("--convention", choices=asympt.CONVENTIONS, default="shared")
    _add_common(p)
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("boundary", help="image of the circle |z| = r as theta,re,im")
    p.add_argument("--map", choices=["g", "h"], required=True)
    p.add_argument("--kind", choices=["conv", "uconv"], default="conv",
                   help="which radius to use for the circle")
    p.add_argument("--nu", type=_rational_arg, required=True)
    p.add_argument("--radius", type=_radius_source, default=("oracle", None))
    p.add_argument("--samples", type=int, default=720)
    p.add_argument("--convention", choices=asympt.CONVENTIONS, default="shared")
    _add_common(p, default_format="csv")
    p.set_defaults(handler=_cmd_boundary)
    return parser


def _jsonable(v):
    return v if isinstance(v, (bool, int, str)) or v is None else str(v)


def render(record: dict, fmt: str) -> str:
    rows = record["results"]
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        fields = []
        for row in rows:
            fields += [k for k in row if k not in fields]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _jsonable(v) for k, v in row.items()})
        return buf.getvalue()
    lines = [f"# {record['command']}"]
    for row in rows:
        lines.append("  ".join(f"{k}={v}" for k, v in row.items()))
    for w in record["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def run(argv: Optional[list] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    renderer = Renderer(args.digits)
    try:
        inputs, rows, warnings = args.handler(args, renderer)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=stderr)
        return 2
    except (BesselRadiiError, ArithmeticError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    record = {"command": args.command, "inputs": inputs, "results": rows, "warnings": warnings}
    if args.format == "csv":
        # CSV has no slot for warnings; surface them on stderr
        for w in warnings:
            print(f"warning: {w}", file=stderr)
    text = render(record, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())
