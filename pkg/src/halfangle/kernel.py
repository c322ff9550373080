"""Certified sin/cos on (0, pi/2) built only from the doubling identities.

The angle is halved ``n`` times until it is tiny, a two-sided enclosure is
written down for the tiny angle, and then the pair is doubled back up with

    cos(2x) = 1 - 2 sin(x)**2
    sin(2x) = 2 sin(x) cos(x)

in outward-rounded interval arithmetic.  Nothing along this path assumes
sin**2 + cos**2 = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .arith import (
    Interval,
    RationalLike,
    iv_clamp,
    iv_mul,
    iv_one_minus,
    iv_scale2,
    iv_sqr,
)
from .errors import DomainError, PrecisionError
from .oracle import half_pi_compare, pi_enclosure

BASE_MAX = Fraction(1, 8)
GUARD_BITS = 8
MIN_PRECISION = 8


@dataclass(frozen=True)
class ComplementAngle:
    """The angle pi/2 - ``of``, kept symbolic so it stays exact."""

    of: Fraction

    def enclose(self, precision_bits: int = 128) -> Interval:
        pi = pi_enclosure(precision_bits + 2)
        return iv_scale2(pi, -1) - Interval.point(self.of, pi.frac_bits)

    def __str__(self) -> str:
        return f"pi/2 - {self.of}"


Angle = Union[Fraction, ComplementAngle]


@dataclass(frozen=True)
class AnglePair:
    theta: Angle
    sin_enc: Interval
    cos_enc: Interval
    depth: int = 0
    frac_bits: int = 0


@dataclass(frozen=True)
class DepthPolicy:
    """Halving depth and working grid for a requested output precision."""

    depth: int
    frac_bits: int

    @classmethod
    def for_angle(cls, theta: RationalLike, precision_bits: int) -> DepthPolicy:
        theta = Fraction(theta)
        depth = math.ceil(precision_bits / 2) + 2
        while theta / (1 << depth) > BASE_MAX:
            depth += 1
        return cls(depth, precision_bits + 2 * depth + GUARD_BITS)


def base_enclosure(x: RationalLike, frac_bits: int) -> AnglePair:
    """Taylor brackets for a tiny angle 0 < x <= 1/8.

    sin x in [x - x**3/6, x] and cos x in [1 - x**2/2, 1 - x**2/2 + x**4/24].
    """
    x = Fraction(x)
    if not 0 < x <= BASE_MAX:
        raise DomainError(f"base angle must lie in (0, 1/8], got {x}")
    x2 = x * x
    sin_enc = Interval.from_rationals(x - x * x2 / 6, x, frac_bits)
    cos_lo = 1 - x2 / 2
    cos_enc = Interval.from_rationals(cos_lo, cos_lo + x2 * x2 / 24, frac_bits)
    return AnglePair(x, sin_enc, cos_enc, 0, frac_bits)


def double_step(p: AnglePair, frac_bits: int | None = None) -> AnglePair:
    """One application of the doubling identities to an enclosure pair."""
    s, c = p.sin_enc, p.cos_enc
    if frac_bits is not None:
        s, c = s.rescale(frac_bits), c.rescale(frac_bits)
    cos2 = iv_one_minus(iv_scale2(iv_sqr(s), 1))
    sin2 = iv_scale2(iv_mul(s, c), 1)
    theta = p.theta * 2 if isinstance(p.theta, Fraction) else None
    return AnglePair(theta, sin2, cos2, p.depth + 1, cos2.frac_bits)


def check_angle(theta: RationalLike) -> Fraction:
    """Return theta as a Fraction, or raise DomainError outside (0, pi/2)."""
    try:
        theta = Fraction(theta)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a rational angle: {theta!r}") from exc
    if theta <= 0 or half_pi_compare(theta) >= 0:
        raise DomainError(f"angle must lie strictly inside (0, pi/2), got {theta}")
    return theta


def _max_width_ok(p: AnglePair, precision_bits: int) -> bool:
    limit = Fraction(1, 1 << precision_bits)
    return p.sin_enc.width <= limit and p.cos_enc.width <= limit


@lru_cache(maxsize=4096)
def sin_cos(theta: RationalLike, precision_bits: int = 128) -> AnglePair:
    """Enclosures of sin(theta), cos(theta), each of width <= 2**-precision_bits."""
    theta = check_angle(theta)
    if precision_bits < MIN_PRECISION:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION}")
    policy = DepthPolicy.for_angle(theta, precision_bits)
    p = base_enclosure(theta / (1 << policy.depth), policy.frac_bits)
    for _ in range(policy.depth):
        p = double_step(p)
    # sin and cos of an angle in (0, pi/2) are legs of a right triangle with
    # hypotenuse 1, hence in [0, 1]
    result = AnglePair(
        theta,
        iv_clamp(p.sin_enc, 0, 1),
        iv_clamp(p.cos_enc, 0, 1),
        policy.depth,
        policy.frac_bits,
    )
    if not _max_width_ok(result, precision_bits):
        raise PrecisionError(
            f"sin_cos({theta}, {precision_bits}) missed the width target: "
            f"sin width {float(result.sin_enc.width):.3g}, "
            f"cos width {float(result.cos_enc.width):.3g}"
        )
    return result


def complement(p: AnglePair) -> AnglePair:
    """Swap sin and cos: the pair for pi/2 - theta."""
    if isinstance(p.theta, ComplementAngle):
        theta: Angle = p.theta.of
    else:
        theta = ComplementAngle(p.theta)
    return AnglePair(theta, p.cos_enc, p.sin_enc, p.depth, p.frac_bits)


def chord_length(theta: RationalLike, precision_bits: int = 128) -> Interval:
    """Third side of the isosceles triangle with unit legs and apex angle theta."""
    theta = check_angle(theta)
    half = sin_cos(theta / 2, precision_bits)
    return iv_scale2(half.sin_enc, 1)


def figure3_residuals(
    theta: RationalLike, precision_bits: int = 128
) -> tuple[Interval, Interval]:
    """Residuals of the two right-triangle relations behind the doubling step.

    Returns enclosures of
        (1 - cos t) - 2 sin(t/2) cos(pi/2 - t/2)
        sin t - 2 sin(t/2) sin(pi/2 - t/2)
    with the pi/2 - t/2 terms taken from :func:`complement`.
    """
    theta = check_angle(theta)
    full = sin_cos(theta, precision_bits)
    half = sin_cos(theta / 2, precision_bits)
    base_angle = complement(half)
    chord = iv_scale2(half.sin_enc, 1)
    r_cos = iv_one_minus(full.cos_enc) - iv_mul(chord, base_angle.cos_enc)
    r_sin = full.sin_enc - iv_mul(chord, base_angle.sin_enc)
    return r_cos, r_sin
