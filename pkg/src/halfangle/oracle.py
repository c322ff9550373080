"""Reference enclosures of sin, cos and pi from Taylor/arctangent series.

This module deliberately uses machinery unrelated to the doubling kernel so
tests can cross-check one against the other.  Nothing in :mod:`kernel`
depends on it except the pi enclosure used for domain checks and degree
conversion.

All series here are alternating with eventually decreasing terms, so two
consecutive partial sums bracket the limit; partial sums are exact
Fractions and only the final bracket is rounded outward.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import Interval, RationalLike
from .errors import DomainError

_GUARD = 4


@dataclass(frozen=True)
class OracleConfig:
    precision_bits: int = 128
    # None: sum until the first omitted term is below 2**-(precision_bits + 4)
    max_terms: int | None = None

    def __post_init__(self) -> None:
        if self.precision_bits < 16:
            raise ValueError("oracle precision_bits must be >= 16")
        if self.max_terms is not None and self.max_terms < 3:
            raise ValueError("max_terms must be >= 3")


def _alternating_bracket(
    first: Fraction, ratio, tol: Fraction, max_terms: int | None
) -> tuple[Fraction, Fraction]:
    """Bracket sum_k (-1)**k t_k where t_0 = first and t_{k+1} = t_k * ratio(k).

    Requires the terms to decrease in magnitude from index 1 onward.
    Returns the last two partial sums, ordered.
    """
    total = first
    term = first
    k = 0
    while True:
        term = term * ratio(k)
        k += 1
        prev = total
        total = total - term if k % 2 else total + term
        if max_terms is not None:
            if k + 1 >= max_terms:
                break
        elif k >= 2 and term < tol:
            break
    return (prev, total) if prev <= total else (total, prev)


def _check_arg(x: Fraction) -> None:
    if not 0 < x < 2:
        raise DomainError(f"oracle argument must lie in (0, 2), got {x}")


def oracle_sin(
    x: RationalLike, precision_bits: int = 128, max_terms: int | None = None
) -> Interval:
    """Enclosure of sin(x) for 0 < x < 2 with width <= 2**-precision_bits."""
    cfg = OracleConfig(precision_bits, max_terms)
    x = Fraction(x)
    _check_arg(x)
    x2 = x * x
    tol = Fraction(1, 1 << (cfg.precision_bits + _GUARD))
    lo, hi = _alternating_bracket(
        x, lambda k: x2 / ((2 * k + 2) * (2 * k + 3)), tol, cfg.max_terms
    )
    return Interval.from_rationals(lo, hi, cfg.precision_bits + _GUARD)


def oracle_cos(
    x: RationalLike, precision_bits: int = 128, max_terms: int | None = None
) -> Interval:
    """Enclosure of cos(x) for 0 < x < 2 with width <= 2**-precision_bits."""
    cfg = OracleConfig(precision_bits, max_terms)
    x = Fraction(x)
    _check_arg(x)
    x2 = x * x
    tol = Fraction(1, 1 << (cfg.precision_bits + _GUARD))
    lo, hi = _alternating_bracket(
        Fraction(1), lambda k: x2 / ((2 * k + 1) * (2 * k + 2)), tol, cfg.max_terms
    )
    return Interval.from_rationals(lo, hi, cfg.precision_bits + _GUARD)


def _arctan_inv_bracket(q: int, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Bracket arctan(1/q) for integer q >= 2."""
    q2 = q * q
    # term_k = 1 / ((2k+1) q^(2k+1))
    return _alternating_bracket(
        Fraction(1, q),
        lambda k: Fraction(2 * k + 1, (2 * k + 3) * q2),
        tol,
        None,
    )


@lru_cache(maxsize=64)
def pi_enclosure(precision_bits: int = 128) -> Interval:
    """Certified enclosure of pi from Machin's formula.

    pi = 16 arctan(1/5) - 4 arctan(1/239).
    """
    if precision_bits < 16:
        raise ValueError("precision_bits must be >= 16")
    tol = Fraction(1, 1 << (precision_bits + 8))
    a_lo, a_hi = _arctan_inv_bracket(5, tol)
    b_lo, b_hi = _arctan_inv_bracket(239, tol)
    return Interval.from_rationals(
        16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo, precision_bits + 2
    )


def half_pi_compare(theta: RationalLike) -> int:
    """Sign of theta - pi/2, certified by refining the pi enclosure.

    Terminates for every rational because pi is irrational.
    """
    theta = Fraction(theta)
    bits = 64
    while True:
        pi = pi_enclosure(bits)
        if 2 * theta < pi.lo.to_rational():
            return -1
        if 2 * theta > pi.hi.to_rational():
            return 1
        bits *= 2
