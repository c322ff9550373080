"""The inductive argument for sin^2 + cos^2 = 1, made checkable.

Write D(x) = cos(x)**2 + sin(x)**2 - 1 for the Pythagorean defect.  If the
pair at 2x is produced from (s, c) = (sin x, cos x) by the doubling step,
then for *any* numbers s, c

    (2sc)**2 + (1 - 2s**2)**2 - 1 = 4 s**2 (s**2 + c**2 - 1),

so D(2x) = 4 sin(x)**2 D(x) and, after n halvings,

    D(theta) = 4**n * prod_{i=1..n} sin(theta/2**i)**2 * D(theta/2**n).

|D| <= 1 trivially, and since sin x < x the product term is below
(4 theta**2)**n 4**-(n(n+1)/2) <= (4 theta**2)**n 2**-(n**2), which goes to
zero.  The functions below evaluate each piece: the exact one-step identity,
certified enclosures of the product term, the two closed-form bounds and
the strict chain between them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import FixedPoint, Interval, RationalLike, iv_mul, iv_scale2, iv_sqr
from .errors import DomainError
from .kernel import check_angle, sin_cos

MAX_TABLE_LEVELS = 64
# escalation factors tried when outward rounding hides a strict inequality
PRECISION_ESCALATION = (1, 2, 4)


def _one(frac_bits: int) -> Interval:
    one = FixedPoint.one(frac_bits)
    return Interval(one, one)


def pythagoras_defect(theta: RationalLike, precision_bits: int = 128) -> Interval:
    """Enclosure of cos^2 + sin^2 - 1 from the kernel's enclosures."""
    p = sin_cos(check_angle(theta), precision_bits)
    total = iv_sqr(p.cos_enc) + iv_sqr(p.sin_enc)
    return total - _one(total.frac_bits)


def defect_recursion_residual(s: RationalLike, c: RationalLike) -> Fraction:
    """(2sc)^2 + (1-2s^2)^2 - 1 - 4s^2(s^2+c^2-1); identically zero."""
    s, c = Fraction(s), Fraction(c)
    doubled = (2 * s * c) ** 2 + (1 - 2 * s * s) ** 2 - 1
    return doubled - 4 * s * s * (s * s + c * c - 1)


def composition_residual(s: RationalLike, c: RationalLike) -> Fraction:
    """(1-2s^2) - (c^2-s^2) - (1-s^2-c^2); identically zero.

    The two half-angle expressions for cos differ by exactly minus the
    defect, so agreeing on cos forces the defect to vanish.
    """
    s, c = Fraction(s), Fraction(c)
    return (1 - 2 * s * s) - (c * c - s * s) - (1 - s * s - c * c)


@dataclass(frozen=True)
class LevelRecord:
    i: int
    half_angle: Fraction
    sin_enc: Interval
    cumulative_product: Interval


@dataclass(frozen=True)
class DefectTrace:
    theta: Fraction
    levels: tuple[LevelRecord, ...]
    precision_bits: int

    @property
    def product(self) -> Interval:
        return self.levels[-1].cumulative_product


def paper_bound(theta: RationalLike, n: int) -> tuple[Fraction, Fraction]:
    """Exact ((4t^2)^n 4^-(n(n+1)/2), (4t^2)^n 2^-(n^2))."""
    theta = Fraction(theta)
    if theta <= 0:
        raise DomainError(f"theta must be positive, got {theta}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    base = (4 * theta * theta) ** n
    return base / (1 << (n * (n + 1))), base / (1 << (n * n))


def _bits_below_one(x: Fraction) -> int:
    """Roughly -log2(x) for 0 < x, never negative."""
    return max(0, x.denominator.bit_length() - x.numerator.bit_length() + 1)


def _level_precision(theta: Fraction, n: int, precision_bits: int) -> int:
    """Sine precision that keeps `precision_bits` relative bits in the product."""
    smallest = min(paper_bound(theta, k)[1] for k in range(1, n + 1))
    return (
        precision_bits
        + _bits_below_one(smallest)
        + n
        + _bits_below_one(theta)
        + 8
    )


def product_term(
    theta: RationalLike, n: int, precision_bits: int = 128
) -> DefectTrace:
    """Enclosures of 4^i prod_{j<=i} sin^2(theta/2^j) for i = 1..n."""
    theta = check_angle(theta)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    bits = _level_precision(theta, n, precision_bits)
    levels = []
    product = _one(bits)
    for i in range(1, n + 1):
        half = theta / (1 << i)
        s = sin_cos(half, bits).sin_enc
        product = iv_mul(product, iv_scale2(iv_sqr(s), 2))
        levels.append(LevelRecord(i, half, s, product))
    return DefectTrace(theta, tuple(levels), precision_bits)


@dataclass(frozen=True)
class BoundReport:
    theta: Fraction
    n: int
    product_term: Interval
    intermediate_bound: Fraction
    final_bound: Fraction
    chain_holds: bool
    precision_bits: int


def _chain(product: Interval, intermediate: Fraction, final: Fraction) -> bool:
    return product.hi < intermediate and intermediate <= final


def bound_chain_check(
    theta: RationalLike, n: int, precision_bits: int = 128
) -> BoundReport:
    """Certify product < (4t^2)^n 4^-sum(i) <= (4t^2)^n 2^-(n^2)."""
    theta = check_angle(theta)
    intermediate, final = paper_bound(theta, n)
    for factor in PRECISION_ESCALATION:
        bits = precision_bits * factor
        product = product_term(theta, n, bits).product
        holds = _chain(product, intermediate, final)
        if holds:
            break
    return BoundReport(theta, n, product, intermediate, final, holds, bits)


def check_half_angle_sq_diff(theta: RationalLike, precision_bits: int = 128) -> Interval:
    """Residual enclosure of cos t - (cos^2(t/2) - sin^2(t/2))."""
    theta = check_angle(theta)
    full = sin_cos(theta, precision_bits)
    half = sin_cos(theta / 2, precision_bits)
    return full.cos_enc - (iv_sqr(half.cos_enc) - iv_sqr(half.sin_enc))


def check_addition(
    alpha: RationalLike, beta: RationalLike, precision_bits: int = 128
) -> Interval:
    """Residual enclosure of cos(a+b) - (cos a cos b - sin a sin b)."""
    alpha, beta = check_angle(alpha), check_angle(beta)
    total = sin_cos(check_angle(alpha + beta), precision_bits)
    a, b = sin_cos(alpha, precision_bits), sin_cos(beta, precision_bits)
    return total.cos_enc - (
        iv_mul(a.cos_enc, b.cos_enc) - iv_mul(a.sin_enc, b.sin_enc)
    )


def check_subtraction(
    alpha: RationalLike, beta: RationalLike, precision_bits: int = 128
) -> tuple[Interval, Interval]:
    """Residual enclosures for cos(a-b) and sin(a-b)."""
    alpha, beta = check_angle(alpha), check_angle(beta)
    diff = sin_cos(check_angle(alpha - beta), precision_bits)
    a, b = sin_cos(alpha, precision_bits), sin_cos(beta, precision_bits)
    r_cos = diff.cos_enc - (iv_mul(a.cos_enc, b.cos_enc) + iv_mul(a.sin_enc, b.sin_enc))
    r_sin = diff.sin_enc - (iv_mul(a.sin_enc, b.cos_enc) - iv_mul(a.cos_enc, b.sin_enc))
    return r_cos, r_sin


@dataclass(frozen=True)
class DecayRow:
    n: int
    half_angle: Fraction
    sin_lo: FixedPoint
    sin_hi: FixedPoint
    product_lo: FixedPoint
    product_hi: FixedPoint
    intermediate_bound: Fraction
    final_bound: Fraction
    chain_holds: bool


def decay_table(
    theta: RationalLike, n_max: int, precision_bits: int = 128
) -> list[DecayRow]:
    """One row per level n = 1..n_max of the product term and its bounds."""
    theta = check_angle(theta)
    if not 1 <= n_max <= MAX_TABLE_LEVELS:
        raise DomainError(f"n_max must lie in [1, {MAX_TABLE_LEVELS}], got {n_max}")
    bounds = [paper_bound(theta, n) for n in range(1, n_max + 1)]
    for factor in PRECISION_ESCALATION:
        trace = product_term(theta, n_max, precision_bits * factor)
        holds = [
            _chain(level.cumulative_product, *bound)
            for level, bound in zip(trace.levels, bounds)
        ]
        if all(holds):
            break
    return [
        DecayRow(
            level.i,
            level.half_angle,
            level.sin_enc.lo,
            level.sin_enc.hi,
            level.cumulative_product.lo,
            level.cumulative_product.hi,
            intermediate,
            final,
            ok,
        )
        for level, (intermediate, final), ok in zip(trace.levels, bounds, holds)
    ]
