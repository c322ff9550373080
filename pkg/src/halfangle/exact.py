"""Exact arithmetic in Q(sqrt2, sqrt3) and the 15-degree angle table.

A :class:`QNum` is ``a + b*sqrt2 + c*sqrt3 + d*sqrt6`` with rational
coefficients.  {1, sqrt2, sqrt3, sqrt6} is a basis over Q, so equality is
componentwise equality and every identity check here is exact.

The sine/cosine table is not taken on faith.  Each entry is the positive
root of an equation produced by one of the doubling relations, starting
from sin 30 = 1/2 (the base of an equilateral triangle with unit sides is
the chord 2 sin 30).  :func:`derivation_checks` re-verifies every step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .arith import FixedPoint, Interval, RationalLike
from .report import Check

LATTICE = (15, 30, 45, 60, 75)


@dataclass(frozen=True)
class QNum:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def coerce(cls, x: QNum | RationalLike) -> QNum:
        return x if isinstance(x, QNum) else cls(Fraction(x))

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_rational(self) -> bool:
        return self.b == self.c == self.d == 0

    def __add__(self, other: QNum | RationalLike) -> QNum:
        o = QNum.coerce(other)
        return QNum(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self) -> QNum:
        return QNum(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: QNum | RationalLike) -> QNum:
        return self + (-QNum.coerce(other))

    def __rsub__(self, other: QNum | RationalLike) -> QNum:
        return QNum.coerce(other) - self

    def __mul__(self, other: QNum | RationalLike) -> QNum:
        o = QNum.coerce(other)
        a1, b1, c1, d1 = self.coefficients
        a2, b2, c2, d2 = o.coefficients
        # sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2
        return QNum(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QNum:
        result = QNum(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QNum(other)
        if not isinstance(other, QNum):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def to_interval(self, frac_bits: int = 128) -> Interval:
        """Outward enclosure using integer square roots (no trigonometry)."""
        f = frac_bits + 8
        total = Interval.point(self.a, f)
        for coeff, k in ((self.b, 2), (self.c, 3), (self.d, 6)):
            if coeff:
                total = total + Interval.point(coeff, f) * sqrt_enclosure(k, f)
        return total.rescale(frac_bits)

    def sign(self) -> int:
        """Exact sign; refines the enclosure until it excludes zero."""
        if self == QNum():
            return 0
        bits = 64
        while True:
            iv = self.to_interval(bits)
            if iv.lo.mantissa > 0:
                return 1
            if iv.hi.mantissa < 0:
                return -1
            bits *= 2

    def __float__(self) -> float:
        return (
            float(self.a)
            + float(self.b) * math.sqrt(2)
            + float(self.c) * math.sqrt(3)
            + float(self.d) * math.sqrt(6)
        )

    def __str__(self) -> str:
        parts = [f"{self.a}"]
        for coeff, name in ((self.b, "√2"), (self.c, "√3"), (self.d, "√6")):
            if coeff:
                parts.append(f"{'+' if coeff > 0 else '-'} {abs(coeff)}{name}")
        return " ".join(parts)


def sqrt_enclosure(k: int, frac_bits: int) -> Interval:
    m = math.isqrt(k << (2 * frac_bits))
    hi = m if m * m == k << (2 * frac_bits) else m + 1
    return Interval(FixedPoint(m, frac_bits), FixedPoint(hi, frac_bits))


def qn_add(x: QNum, y: QNum) -> QNum:
    return x + y


def qn_mul(x: QNum, y: QNum) -> QNum:
    return x * y


def qn_neg(x: QNum) -> QNum:
    return -x


def qn_eq(x: QNum, y: QNum) -> bool:
    return x == y


SQRT2 = QNum(0, 1)
SQRT3 = QNum(0, 0, 1)
SQRT6 = QNum(0, 0, 0, 1)

_q = Fraction(1, 4)
_h = Fraction(1, 2)
# sin 30 from the equilateral chord; cos 60 = 1 - 2 sin^2 30;
# cos 30: cos 60 = cos^2 30 - sin^2 30; sin 45: 1 - 2 sin^2 45 = cos 90 = 0;
# cos 45: 2 sin 45 cos 45 = sin 90 = 1; sin 15: 1 - 2 sin^2 15 = cos 30;
# cos 15: 2 sin 15 cos 15 = sin 30.  60 and 75 are complements of 30 and 15.
_SIN = {
    15: QNum(0, -_q, 0, _q),
    30: QNum(_h),
    45: QNum(0, _h),
}
_COS = {
    15: QNum(0, _q, 0, _q),
    30: QNum(0, 0, _h),
    45: QNum(0, _h),
}
for _deg in (15, 30):
    _SIN[90 - _deg] = _COS[_deg]
    _COS[90 - _deg] = _SIN[_deg]


def _angle(degrees: int) -> int:
    if degrees not in LATTICE:
        raise ValueError(f"exact angles are {LATTICE}, got {degrees}")
    return degrees


def exact_sin(degrees: int) -> QNum:
    return _SIN[_angle(degrees)]


def exact_cos(degrees: int) -> QNum:
    return _COS[_angle(degrees)]


def derivation_checks() -> list[Check]:
    """Re-verify every step used to build the exact table."""
    s, c = _SIN, _COS
    steps = [
        ("sin30 = chord(60)/2 = 1/2", s[30] == Fraction(1, 2)),
        ("cos60 = 1 - 2 sin^2 30", c[60] == 1 - 2 * s[30] ** 2),
        ("cos60 = cos^2 30 - sin^2 30", c[60] == c[30] ** 2 - s[30] ** 2),
        ("cos30 > 0", c[30].sign() > 0),
        # boundary note: angle 90 is outside the open domain; 45 is
        # re-confirmed inside the domain by cos(15 + 30) below
        ("boundary: 1 - 2 sin^2 45 = 0", 1 - 2 * s[45] ** 2 == 0),
        ("boundary: 2 sin45 cos45 = 1", 2 * s[45] * c[45] == 1),
        ("sin45 > 0", s[45].sign() > 0),
        ("cos45 = cos15 cos30 - sin15 sin30", c[45] == c[15] * c[30] - s[15] * s[30]),
        ("1 - 2 sin^2 15 = cos30", 1 - 2 * s[15] ** 2 == c[30]),
        ("sin15 > 0", s[15].sign() > 0),
        ("2 sin15 cos15 = sin30", 2 * s[15] * c[15] == s[30]),
        ("cos15 > 0", c[15].sign() > 0),
    ]
    return [Check("derivation", name, bool(ok)) for name, ok in steps]


def exact_identity_suite() -> list[Check]:
    """Every in-scope identity at the lattice angles, with exact equality."""
    checks = derivation_checks()

    def add(group: str, name: str, lhs: QNum, rhs: QNum) -> None:
        checks.append(Check(group, name, lhs == rhs, f"{lhs} vs {rhs}"))

    for t in LATTICE:
        add("pythagoras", f"sin^2+cos^2 at {t}", exact_sin(t) ** 2 + exact_cos(t) ** 2, QNum(1))
        add("complement", f"sin({90 - t}) = cos({t})", exact_sin(90 - t), exact_cos(t))
        add("complement", f"cos({90 - t}) = sin({t})", exact_cos(90 - t), exact_sin(t))

    for t in (30, 60):
        h = t // 2
        sh, ch = exact_sin(h), exact_cos(h)
        add("half-angle-sq-diff", f"cos{t} = cos^2 {h} - sin^2 {h}", exact_cos(t), ch**2 - sh**2)
        add("half-angle-cos", f"cos{t} = 1 - 2 sin^2 {h}", exact_cos(t), 1 - 2 * sh**2)
        add("half-angle-sin", f"sin{t} = 2 sin{h} cos{h}", exact_sin(t), 2 * sh * ch)
        comp = 90 - h
        add(
            "figure3",
            f"1 - cos{t} = 2 sin{h} cos{comp}",
            1 - exact_cos(t),
            2 * sh * exact_cos(comp),
        )
        add(
            "figure3",
            f"sin{t} = 2 sin{h} sin{comp}",
            exact_sin(t),
            2 * sh * exact_sin(comp),
        )

    for alpha, beta in product(LATTICE, repeat=2):
        if alpha + beta in LATTICE:
            add(
                "addition",
                f"cos({alpha}+{beta})",
                exact_cos(alpha + beta),
                exact_cos(alpha) * exact_cos(beta) - exact_sin(alpha) * exact_sin(beta),
            )
        if alpha - beta in LATTICE:
            add(
                "subtraction",
                f"cos({alpha}-{beta})",
                exact_cos(alpha - beta),
                exact_cos(alpha) * exact_cos(beta) + exact_sin(alpha) * exact_sin(beta),
            )
            add(
                "subtraction",
                f"sin({alpha}-{beta})",
                exact_sin(alpha - beta),
                exact_sin(alpha) * exact_cos(beta) - exact_cos(alpha) * exact_sin(beta),
            )
    return checks
