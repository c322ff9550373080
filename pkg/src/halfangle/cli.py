"""Command-line front end: ``halfangle {eval,decay-table,verify,chord}``.

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Context, Decimal, Inexact
from fractions import Fraction
from typing import Callable

from . import exact, identities, kernel
from .arith import FixedPoint, Interval, Rounding, iv_scale2, iv_widen
from .errors import DomainError, PrecisionError
from .oracle import pi_enclosure
from .report import Check

DECAY_HEADER = [
    "n",
    "half_angle",
    "sin_lo",
    "sin_hi",
    "product_lo",
    "product_hi",
    "intermediate_bound",
    "final_bound",
    "chain_holds",
]
CHORD_LEVELS = 8
RECURSION_SAMPLES = 10_000
IDENTITY_SAMPLES = 8
DEG_EXTRA_BITS = 16


class UsageError(Exception):
    pass


# -- decimal rendering ---------------------------------------------------------


def directed_decimal(r: Fraction | FixedPoint, digits: int, up: bool) -> str:
    """``r`` rounded toward +inf (up) or -inf to ``digits`` significant digits."""
    if isinstance(r, FixedPoint):
        r = r.to_rational()
    if r == 0:
        return "0"
    ctx = Context(prec=digits, rounding=ROUND_CEILING if up else ROUND_FLOOR)
    d = ctx.divide(Decimal(r.numerator), Decimal(r.denominator))
    return format(d, f".{digits - 1}e")


def exact_decimal(r: Fraction | FixedPoint) -> str:
    """Exact scientific decimal when ``r`` terminates, else ``num/den``."""
    if isinstance(r, FixedPoint):
        r = r.to_rational()
    if r == 0:
        return "0"
    prec = len(str(abs(r.numerator))) + r.denominator.bit_length() + 8
    ctx = Context(prec=prec, traps=[Inexact])
    try:
        d = ctx.divide(Decimal(r.numerator), Decimal(r.denominator))
    except Inexact:
        return f"{r.numerator}/{r.denominator}"
    d = d.normalize(ctx)
    if d == d.to_integral_value() and abs(d) < 10**prec:
        return format(d.quantize(Decimal(1)), "f")
    return format(d, "e")


def interval_dict(iv: Interval, digits: int) -> dict:
    return {
        "lo": directed_decimal(iv.lo, digits, up=False),
        "hi": directed_decimal(iv.hi, digits, up=True),
        "width": directed_decimal(iv.width, digits, up=True),
    }


# -- angle handling ------------------------------------------------------------


@dataclass(frozen=True)
class ResolvedAngle:
    text: str
    unit: str
    radians: Fraction
    # |radians - true angle|; zero for radian input
    error_bound: Fraction

    def metadata(self) -> dict:
        return {
            "input": self.text,
            "unit": self.unit,
            "dyadic_theta": exact_decimal(self.radians),
            "angle_error_bound": exact_decimal(self.error_bound),
        }


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {text!r} as a decimal or rational") from exc


def resolve_angle(text: str, unit: str, bits: int) -> ResolvedAngle:
    value = parse_rational(text)
    if unit == "rad":
        return ResolvedAngle(text, unit, value, Fraction(0))
    if not 0 < value < 90:
        raise DomainError(f"angle must lie strictly inside (0, 90) degrees, got {value}")
    pi = pi_enclosure(bits + DEG_EXTRA_BITS)
    scale = value / 180
    lo, hi = scale * pi.lo.to_rational(), scale * pi.hi.to_rational()
    grid = pi.frac_bits + 2
    dyadic = FixedPoint.from_rational((lo + hi) / 2, grid, Rounding.DOWN).to_rational()
    return ResolvedAngle(text, unit, dyadic, max(dyadic - lo, hi - dyadic))


def widen(iv: Interval, angle: ResolvedAngle, lipschitz: int = 1) -> Interval:
    """Move an enclosure at the dyadic angle to one at the true angle.

    |sin a - sin b| and |cos a - cos b| are both at most |a - b|.
    """
    if angle.error_bound == 0:
        return iv
    return iv_widen(iv, lipschitz * angle.error_bound)


# -- output helpers -----------------------------------------------------------


def emit_json(obj: dict, out) -> None:
    json.dump(obj, out, indent=2, sort_keys=True)
    out.write("\n")


def emit_csv(header: list[str], rows: list[list], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


# -- commands -----------------------------------------------------------------


def cmd_eval(args: argparse.Namespace, out) -> int:
    angle = resolve_angle(args.theta, args.unit, args.bits)
    pair = kernel.sin_cos(angle.radians, args.bits)
    defect = identities.pythagoras_defect(angle.radians, args.bits)
    sin_enc, cos_enc = widen(pair.sin_enc, angle), widen(pair.cos_enc, angle)
    report = {
        "angle": angle.metadata(),
        "enclosures": {
            "sin": interval_dict(sin_enc, args.digits),
            "cos": interval_dict(cos_enc, args.digits),
        },
        "defect": interval_dict(defect, args.digits),
        "defect_contains_zero": defect.contains(0),
        "metadata": {
            "bits": args.bits,
            "depth": pair.depth,
            "working_frac_bits": pair.frac_bits,
            "dyadic_theta": exact_decimal(angle.radians),
        },
    }
    if args.format == "json":
        emit_json(report, out)
    elif args.format == "csv":
        rows = [
            [name, v["lo"], v["hi"], v["width"]]
            for name, v in (
                ("sin", report["enclosures"]["sin"]),
                ("cos", report["enclosures"]["cos"]),
                ("defect", report["defect"]),
            )
        ]
        emit_csv(["quantity", "lo", "hi", "width"], rows, out)
    else:
        print(f"theta = {args.theta} {args.unit} (dyadic {exact_decimal(angle.radians)})", file=out)
        print(f"depth = {pair.depth}, working frac bits = {pair.frac_bits}", file=out)
        for name in ("sin", "cos"):
            v = report["enclosures"][name]
            print(f"{name:6} [{v['lo']}, {v['hi']}]  width {v['width']}", file=out)
        v = report["defect"]
        print(f"defect [{v['lo']}, {v['hi']}]  width {v['width']}", file=out)
    return 0


def decay_cells(row: identities.DecayRow, digits: int) -> list:
    return [
        row.n,
        exact_decimal(row.half_angle),
        directed_decimal(row.sin_lo, digits, up=False),
        directed_decimal(row.sin_hi, digits, up=True),
        directed_decimal(row.product_lo, digits, up=False),
        directed_decimal(row.product_hi, digits, up=True),
        exact_decimal(row.intermediate_bound),
        exact_decimal(row.final_bound),
        "true" if row.chain_holds else "false",
    ]


def cmd_decay_table(args: argparse.Namespace, out) -> int:
    if not 1 <= args.n <= identities.MAX_TABLE_LEVELS:
        raise UsageError(f"--n must lie in [1, {identities.MAX_TABLE_LEVELS}], got {args.n}")
    angle = resolve_angle(args.theta, args.unit, args.bits)
    rows = identities.decay_table(angle.radians, args.n, args.bits)
    cells = [decay_cells(r, args.digits) for r in rows]
    if args.format == "csv":
        emit_csv(DECAY_HEADER, cells, out)
    elif args.format == "json":
        emit_json(
            {
                "angle": angle.metadata(),
                "bits": args.bits,
                "rows": [
                    {**dict(zip(DECAY_HEADER, c)), "chain_holds": r.chain_holds}
                    for r, c in zip(rows, cells)
                ],
            },
            out,
        )
    else:
        print("  ".join(DECAY_HEADER), file=out)
        for c in cells:
            print("  ".join(str(x) for x in c), file=out)
    return 0 if all(r.chain_holds for r in rows) else 1


def _random_angles(rng: random.Random, count: int) -> list[Fraction]:
    # 1570796/10**6 < pi/2
    return [Fraction(rng.randint(1, 1_570_795), 1_000_000) for _ in range(count)]


def identity_checks(bits: int, seed: int) -> list[Check]:
    rng = random.Random(seed)
    limit = 1 << 3
    checks = []

    def record(name: str, iv: Interval) -> None:
        ok = iv.contains(0)
        within = iv.width.to_rational() * (1 << bits) <= limit
        checks.append(
            Check(
                "identities",
                name,
                ok,
                f"width {directed_decimal(iv.width, 6, up=True)}"
                + ("" if within else " (above 2^-(bits-3))"),
            )
        )

    for theta in _random_angles(rng, IDENTITY_SAMPLES):
        t = exact_decimal(theta)
        record(f"defect({t})", identities.pythagoras_defect(theta, bits))
        record(f"half-angle-sq-diff({t})", identities.check_half_angle_sq_diff(theta, bits))
        r_cos, r_sin = kernel.figure3_residuals(theta, bits)
        record(f"figure3-cos({t})", r_cos)
        record(f"figure3-sin({t})", r_sin)
        a, b = sorted(_random_angles(rng, 2))
        if a + b < Fraction(1_570_796, 1_000_000):
            record(f"addition({exact_decimal(a)},{exact_decimal(b)})", identities.check_addition(a, b, bits))
        if a < b:
            r_cos, r_sin = identities.check_subtraction(b, a, bits)
            record(f"subtraction-cos({exact_decimal(b)},{exact_decimal(a)})", r_cos)
            record(f"subtraction-sin({exact_decimal(b)},{exact_decimal(a)})", r_sin)
    return checks


def _random_rational(rng: random.Random) -> Fraction:
    den = rng.randint(1, 10**6)
    return Fraction(rng.randint(-2 * den, 2 * den), den)


def recursion_checks(seed: int, samples: int = RECURSION_SAMPLES) -> list[Check]:
    rng = random.Random(seed)
    pairs = [(_random_rational(rng), _random_rational(rng)) for _ in range(samples)]
    rec_bad = sum(identities.defect_recursion_residual(s, c) != 0 for s, c in pairs)
    comp_bad = sum(identities.composition_residual(s, c) != 0 for s, c in pairs)
    return [
        Check("recursion", f"defect recursion, {samples} pairs", rec_bad == 0, f"{rec_bad} nonzero"),
        Check("recursion", f"half-angle composition, {samples} pairs", comp_bad == 0, f"{comp_bad} nonzero"),
    ]


SUITES: dict[str, Callable[[argparse.Namespace], list[Check]]] = {
    "identities": lambda a: identity_checks(a.bits, a.seed),
    "exact": lambda a: exact.exact_identity_suite(),
    "recursion": lambda a: recursion_checks(a.seed),
}


def cmd_verify(args: argparse.Namespace, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    checks = [c for name in names for c in SUITES[name](args)]
    passed = all(c.passed for c in checks)
    if args.format == "json":
        emit_json(
            {
                "suite": args.suite,
                "bits": args.bits,
                "seed": args.seed,
                "passed": passed,
                "checks": [c.to_dict() for c in checks],
            },
            out,
        )
    elif args.format == "csv":
        emit_csv(
            ["suite", "name", "passed", "detail"],
            [[c.suite, c.name, "true" if c.passed else "false", c.detail] for c in checks],
            out,
        )
    else:
        for c in checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.suite}: {c.name}  {c.detail}", file=out)
        print(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed", file=out)
    return 0 if passed else 1


def cmd_chord(args: argparse.Namespace, out) -> int:
    angle = resolve_angle(args.theta, args.unit, args.bits)
    theta = kernel.check_angle(angle.radians)
    chord = widen(kernel.chord_length(theta, args.bits), angle)
    sequence = [
        iv_scale2(kernel.sin_cos(theta / (1 << n), args.bits).sin_enc, n)
        for n in range(CHORD_LEVELS + 1)
    ]
    increasing = all(a.hi < b.lo for a, b in zip(sequence, sequence[1:]))
    below = sequence[-1].hi < theta
    rows = [
        [n, directed_decimal(iv.lo, args.digits, up=False), directed_decimal(iv.hi, args.digits, up=True)]
        for n, iv in enumerate(sequence)
    ]
    if args.format == "json":
        emit_json(
            {
                "angle": angle.metadata(),
                "chord": interval_dict(chord, args.digits),
                "sequence": [{"n": r[0], "lo": r[1], "hi": r[2]} for r in rows],
                "upper_bound": exact_decimal(theta),
                "strictly_increasing": increasing,
                "below_theta": below,
            },
            out,
        )
    elif args.format == "csv":
        emit_csv(["n", "lo", "hi"], rows, out)
    else:
        c = interval_dict(chord, args.digits)
        print(f"chord 2 sin(theta/2) in [{c['lo']}, {c['hi']}]", file=out)
        print("n  2^n sin(theta/2^n)", file=out)
        for n, lo, hi in rows:
            print(f"{n}  [{lo}, {hi}]", file=out)
        print(f"theta = {exact_decimal(theta)}", file=out)
        print(f"strictly increasing: {increasing}; below theta: {below}", file=out)
    return 0 if increasing and below else 1


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfangle",
        description="Certified sin/cos from doubling identities, and checks of the "
        "Pythagorean identity they imply.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, angle: bool = True) -> None:
        if angle:
            p.add_argument("--theta", required=True, help="decimal or p/q")
            p.add_argument("--unit", choices=["rad", "deg"], default="rad")
        p.add_argument("--bits", type=int, default=128)
        p.add_argument("--format", choices=["text", "csv", "json"], default="text")
        p.add_argument("--digits", type=int, default=30, help="significant digits printed")

    p = sub.add_parser("eval", help="sin/cos enclosures and the Pythagorean defect")
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("decay-table", help="product term against its closed-form bounds")
    common(p)
    p.add_argument("--n", type=int, default=10)
    p.set_defaults(func=cmd_decay_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=["identities", "exact", "recursion", "all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    common(p, angle=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chord", help="chord 2 sin(theta/2) and the doubling sequence")
    common(p)
    p.set_defaults(func=cmd_chord)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.bits < kernel.MIN_PRECISION:
        print(f"halfangle: error: --bits must be >= {kernel.MIN_PRECISION}", file=sys.stderr)
        return 2
    if args.digits < 1:
        print("halfangle: error: --digits must be >= 1", file=sys.stderr)
        return 2
    buffer = io.StringIO()
    try:
        code = args.func(args, buffer)
    except (UsageError, DomainError) as exc:
        print(f"halfangle: error: {exc}", file=sys.stderr)
        return 2
    except PrecisionError as exc:
        print(f"halfangle: precision failure: {exc}", file=sys.stderr)
        return 1
    out.write(buffer.getvalue())
    return code


def main_entry() -> None:
    sys.exit(main())
