"""Binary fixed-point scalars and outward-rounded intervals.

Every approximate quantity in the package is an :class:`Interval` whose
endpoints are :class:`FixedPoint` numbers, i.e. ``mantissa * 2**-frac_bits``
with an arbitrary-size integer mantissa.  Addition and subtraction of
fixed-point numbers are exact; only multiplication rounds, and it always
rounds in an explicitly requested direction.

Exact rationals are plain :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int]


class Rounding(enum.Enum):
    DOWN = "down"  # toward -inf
    UP = "up"  # toward +inf


def _shift_round(n: int, shift: int, mode: Rounding) -> int:
    """Return n / 2**shift rounded in direction ``mode`` (shift >= 0)."""
    if shift <= 0:
        return n << -shift
    if mode is Rounding.DOWN:
        return n >> shift
    return -((-n) >> shift)


def _div_round(num: int, den: int, mode: Rounding) -> int:
    if mode is Rounding.DOWN:
        return num // den
    return -((-num) // den)


@total_ordering
@dataclass(frozen=True, eq=False)
class FixedPoint:
    """The dyadic number ``mantissa * 2**-frac_bits``."""

    mantissa: int
    frac_bits: int

    def __post_init__(self) -> None:
        if self.frac_bits < 0:
            raise ValueError(f"frac_bits must be non-negative, got {self.frac_bits}")

    @classmethod
    def from_rational(
        cls, r: RationalLike, frac_bits: int, mode: Rounding = Rounding.DOWN
    ) -> FixedPoint:
        r = Fraction(r)
        if frac_bits < 0:
            raise ValueError(f"frac_bits must be non-negative, got {frac_bits}")
        m = _div_round(r.numerator << frac_bits, r.denominator, mode)
        return cls(m, frac_bits)

    @classmethod
    def zero(cls, frac_bits: int = 0) -> FixedPoint:
        return cls(0, frac_bits)

    @classmethod
    def one(cls, frac_bits: int = 0) -> FixedPoint:
        return cls(1 << frac_bits, frac_bits)

    def to_rational(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.frac_bits)

    def rescale(self, frac_bits: int, mode: Rounding = Rounding.DOWN) -> FixedPoint:
        """Move to another grid; exact when ``frac_bits >= self.frac_bits``."""
        if frac_bits == self.frac_bits:
            return self
        return FixedPoint(
            _shift_round(self.mantissa, self.frac_bits - frac_bits, mode), frac_bits
        )

    def _aligned(self, other: FixedPoint) -> tuple[int, int, int]:
        f = max(self.frac_bits, other.frac_bits)
        return (
            self.mantissa << (f - self.frac_bits),
            other.mantissa << (f - other.frac_bits),
            f,
        )

    def __add__(self, other: FixedPoint) -> FixedPoint:
        a, b, f = self._aligned(other)
        return FixedPoint(a + b, f)

    def __sub__(self, other: FixedPoint) -> FixedPoint:
        a, b, f = self._aligned(other)
        return FixedPoint(a - b, f)

    def __neg__(self) -> FixedPoint:
        return FixedPoint(-self.mantissa, self.frac_bits)

    def mul(self, other: FixedPoint, frac_bits: int, mode: Rounding) -> FixedPoint:
        """Product rounded onto the ``frac_bits`` grid in direction ``mode``."""
        m = self.mantissa * other.mantissa
        return FixedPoint(
            _shift_round(m, self.frac_bits + other.frac_bits - frac_bits, mode),
            frac_bits,
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FixedPoint):
            a, b, _ = self._aligned(other)
            return a == b
        if isinstance(other, (int, Fraction)):
            return self.to_rational() == other
        return NotImplemented

    def __lt__(self, other: FixedPoint | RationalLike) -> bool:
        if isinstance(other, FixedPoint):
            a, b, _ = self._aligned(other)
            return a < b
        return self.to_rational() < other

    def __hash__(self) -> int:
        return hash(self.to_rational())

    def __float__(self) -> float:
        return self.mantissa / (1 << self.frac_bits) if self.frac_bits < 1000 else float(
            self.to_rational()
        )

    def __repr__(self) -> str:
        return f"FixedPoint({self.mantissa}, frac_bits={self.frac_bits})"


def fp_from_rational(r: RationalLike, frac_bits: int, mode: Rounding) -> FixedPoint:
    return FixedPoint.from_rational(r, frac_bits, mode)


def fp_add(a: FixedPoint, b: FixedPoint) -> FixedPoint:
    return a + b


def fp_sub(a: FixedPoint, b: FixedPoint) -> FixedPoint:
    return a - b


def fp_mul(a: FixedPoint, b: FixedPoint, frac_bits: int, mode: Rounding) -> FixedPoint:
    return a.mul(b, frac_bits, mode)


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` with endpoints on a common grid."""

    lo: FixedPoint
    hi: FixedPoint

    def __post_init__(self) -> None:
        if self.lo.frac_bits != self.hi.frac_bits:
            f = max(self.lo.frac_bits, self.hi.frac_bits)
            object.__setattr__(self, "lo", self.lo.rescale(f))
            object.__setattr__(self, "hi", self.hi.rescale(f))
        if self.hi.mantissa < self.lo.mantissa:
            raise ValueError(f"empty interval: lo={self.lo!r} > hi={self.hi!r}")

    @classmethod
    def point(cls, r: RationalLike, frac_bits: int) -> Interval:
        """Smallest interval on the ``frac_bits`` grid that contains ``r``."""
        return cls(
            FixedPoint.from_rational(r, frac_bits, Rounding.DOWN),
            FixedPoint.from_rational(r, frac_bits, Rounding.UP),
        )

    @classmethod
    def from_rationals(cls, lo: RationalLike, hi: RationalLike, frac_bits: int) -> Interval:
        return cls(
            FixedPoint.from_rational(lo, frac_bits, Rounding.DOWN),
            FixedPoint.from_rational(hi, frac_bits, Rounding.UP),
        )

    @property
    def frac_bits(self) -> int:
        return self.lo.frac_bits

    @property
    def width(self) -> FixedPoint:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo.to_rational() + self.hi.to_rational()) / 2

    def rescale(self, frac_bits: int) -> Interval:
        """Re-grid outward; exact when refining."""
        return Interval(
            self.lo.rescale(frac_bits, Rounding.DOWN),
            self.hi.rescale(frac_bits, Rounding.UP),
        )

    def contains(self, r: RationalLike) -> bool:
        r = Fraction(r)
        scaled_num = r.numerator << self.frac_bits
        return (
            self.lo.mantissa * r.denominator
            <= scaled_num
            <= self.hi.mantissa * r.denominator
        )

    def contains_interval(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other: Interval) -> Interval:
        return iv_add(self, other)

    def __sub__(self, other: Interval) -> Interval:
        return iv_sub(self, other)

    def __mul__(self, other: Interval) -> Interval:
        return iv_mul(self, other)

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __repr__(self) -> str:
        return f"Interval([{float(self.lo)!r}, {float(self.hi)!r}], frac_bits={self.frac_bits})"


def iv_add(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo + y.lo, x.hi + y.hi)


def iv_sub(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo - y.hi, x.hi - y.lo)


def iv_mul(x: Interval, y: Interval) -> Interval:
    """Outward-rounded product on the finer of the two operand grids."""
    f = max(x.frac_bits, y.frac_bits)
    x, y = x.rescale(f), y.rescale(f)
    a, b = x.lo.mantissa, x.hi.mantissa
    c, d = y.lo.mantissa, y.hi.mantissa
    if a >= 0 and c >= 0:
        lo, hi = a * c, b * d
    else:
        products = (a * c, a * d, b * c, b * d)
        lo, hi = min(products), max(products)
    return Interval(
        FixedPoint(_shift_round(lo, f, Rounding.DOWN), f),
        FixedPoint(_shift_round(hi, f, Rounding.UP), f),
    )


def iv_sqr(x: Interval) -> Interval:
    f = x.frac_bits
    a, b = x.lo.mantissa, x.hi.mantissa
    if a >= 0:
        lo, hi = a * a, b * b
    elif b <= 0:
        lo, hi = b * b, a * a
    else:
        lo, hi = 0, max(a * a, b * b)
    return Interval(
        FixedPoint(_shift_round(lo, f, Rounding.DOWN), f),
        FixedPoint(_shift_round(hi, f, Rounding.UP), f),
    )


def iv_scale2(x: Interval, k: int) -> Interval:
    """Multiply by ``2**k`` exactly (negative k refines the grid)."""
    if k >= 0:
        return Interval(
            FixedPoint(x.lo.mantissa << k, x.frac_bits),
            FixedPoint(x.hi.mantissa << k, x.frac_bits),
        )
    f = x.frac_bits - k
    return Interval(FixedPoint(x.lo.mantissa, f), FixedPoint(x.hi.mantissa, f))


def iv_one_minus(x: Interval) -> Interval:
    one = FixedPoint.one(x.frac_bits)
    return Interval(one - x.hi, one - x.lo)


def iv_contains(x: Interval, r: RationalLike) -> bool:
    return x.contains(r)


def iv_width(x: Interval) -> FixedPoint:
    return x.width


def iv_hull(x: Interval, y: Interval) -> Interval:
    return Interval(min(x.lo, y.lo), max(x.hi, y.hi))


def iv_widen(x: Interval, r: RationalLike) -> Interval:
    """Enlarge both sides by the non-negative rational ``r`` (outward)."""
    f = x.frac_bits
    pad = FixedPoint.from_rational(r, f, Rounding.UP)
    return Interval(x.lo - pad, x.hi + pad)


def iv_clamp(x: Interval, lo: RationalLike, hi: RationalLike) -> Interval:
    """Intersect with ``[lo, hi]``; the caller guarantees the truth lies in both."""
    f = x.frac_bits
    bound_lo = FixedPoint.from_rational(lo, f, Rounding.DOWN)
    bound_hi = FixedPoint.from_rational(hi, f, Rounding.UP)
    new_lo = max(x.lo, bound_lo)
    new_hi = min(x.hi, bound_hi)
    if new_hi < new_lo:
        raise ValueError(f"{x!r} does not meet [{lo}, {hi}]")
    return Interval(new_lo, new_hi)
