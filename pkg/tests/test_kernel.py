from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from halfangle.arith import Interval, iv_scale2, iv_widen
from halfangle.errors import DomainError
from halfangle.exact import exact_cos, exact_sin
from halfangle.kernel import (
    AnglePair,
    ComplementAngle,
    DepthPolicy,
    base_enclosure,
    check_angle,
    chord_length,
    complement,
    double_step,
    figure3_residuals,
    sin_cos,
)
from halfangle.oracle import oracle_cos, oracle_sin, pi_enclosure

from conftest import meets_reference

angles = st.fractions(min_value=Fraction(1, 10**4), max_value=Fraction(1570, 1000),
                      max_denominator=10**6)


def lattice_angle(degrees, bits=256):
    """Dyadic radian approximation of a degree angle and its error bound."""
    pi = pi_enclosure(bits)
    mid = pi.midpoint * degrees / 180
    err = (pi.hi.to_rational() - pi.lo.to_rational()) * degrees / 180
    return mid, err


def encloses_qnum(iv, q, slack=Fraction(0)):
    return iv_widen(iv, slack).contains_interval(q.to_interval(2 * iv.frac_bits))


class TestBaseEnclosure:
    def test_tiny(self):
        x = Fraction(1, 1 << 30)
        p = base_enclosure(x, 128)
        assert p.sin_enc.contains(x - x**3 / 6)
        assert p.sin_enc.width < Fraction(1, 1 << 89)

    def test_eighth(self):
        p = base_enclosure(Fraction(1, 8), 64)
        assert meets_reference(p.sin_enc, "sin(1/8)")
        assert meets_reference(p.cos_enc, "cos(1/8)")
        assert p.sin_enc.overlaps(oracle_sin(Fraction(1, 8), 64))
        assert p.cos_enc.overlaps(oracle_cos(Fraction(1, 8), 64))

    @pytest.mark.parametrize("x", [0, Fraction(-1, 100), Fraction(1, 7)])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            base_enclosure(x, 64)

    @given(st.fractions(min_value=Fraction(1, 10**9), max_value=Fraction(1, 8)),
           st.integers(8, 200))
    def test_width_bound(self, x, bits):
        p = base_enclosure(x, bits)
        slack = Fraction(4, 1 << bits)
        assert p.sin_enc.width <= x**3 / 6 + x**4 / 24 + slack
        assert p.cos_enc.width <= x**3 / 6 + x**4 / 24 + slack


class TestDoubleStep:
    def test_point_data(self):
        f = 16
        c = Fraction(3, 4)
        p = AnglePair(Fraction(1, 2), Interval.point(Fraction(1, 2), f), Interval.point(c, f))
        q = double_step(p)
        assert q.cos_enc == Interval.point(Fraction(1, 2), f)
        assert q.sin_enc == Interval.point(Fraction(3, 4), f)
        assert q.theta == 1

    def test_fifteen_to_thirty(self):
        f = 200
        theta, _ = lattice_angle(15)
        p = AnglePair(theta, exact_sin(15).to_interval(f), exact_cos(15).to_interval(f))
        q = double_step(p)
        assert q.theta == 2 * theta
        assert q.sin_enc.contains(Fraction(1, 2))
        assert encloses_qnum(q.cos_enc, exact_cos(30))

    @given(st.integers(-64, 64), st.integers(-64, 64))
    def test_defect_propagates_exactly(self, sm, cm):
        # dyadic inputs on a 2**-6 grid; every product is exact at 32 bits
        s, c = Fraction(sm, 64), Fraction(cm, 64)
        p = AnglePair(Fraction(1, 10), Interval.point(s, 32), Interval.point(c, 32))
        q = double_step(p)
        s2, c2 = q.sin_enc.lo.to_rational(), q.cos_enc.lo.to_rational()
        assert q.sin_enc.width == 0 and q.cos_enc.width == 0
        assert s2**2 + c2**2 - 1 == 4 * s * s * (s * s + c * c - 1)

    @settings(max_examples=30)
    @given(angles)
    def test_doubling_consistency(self, theta):
        half = sin_cos(theta / 2, 96)
        q = double_step(half)
        assert q.sin_enc.contains(oracle_sin(theta, q.frac_bits + 8).midpoint)
        assert q.cos_enc.contains(oracle_cos(theta, q.frac_bits + 8).midpoint)


class TestSinCos:
    def test_quarter_pi(self):
        theta, err = lattice_angle(45)
        p = sin_cos(theta, 128)
        assert encloses_qnum(p.sin_enc, exact_sin(45), err)
        assert encloses_qnum(p.cos_enc, exact_cos(45), err)

    def test_one_radian(self):
        p = sin_cos(1, 64)
        assert meets_reference(p.sin_enc, "sin(1)")
        assert meets_reference(p.cos_enc, "cos(1)")

    def test_eighth_overlaps_base(self):
        p = sin_cos(Fraction(1, 8), 64)
        b = base_enclosure(Fraction(1, 8), 64)
        assert p.sin_enc.overlaps(b.sin_enc) and p.cos_enc.overlaps(b.cos_enc)

    @pytest.mark.parametrize("theta", [0, -1, Fraction(1571, 1000), 2, Fraction(11, 7)])
    def test_domain(self, theta):
        with pytest.raises(DomainError):
            sin_cos(theta, 64)

    def test_pi_half_dyadic_rejected(self):
        pi = pi_enclosure(128)
        with pytest.raises(DomainError):
            sin_cos(pi.hi.to_rational() / 2, 64)
        assert sin_cos(pi.lo.to_rational() / 2, 64).sin_enc.contains(1)

    def test_low_precision_rejected(self):
        with pytest.raises(ValueError):
            sin_cos(1, 4)

    @pytest.mark.parametrize("bits", [8, 32, 64, 128, 256])
    @pytest.mark.parametrize("theta", [Fraction(1, 10**6), Fraction(1), Fraction(157, 100)])
    def test_width_contract_and_policy(self, theta, bits):
        p = sin_cos(theta, bits)
        policy = DepthPolicy.for_angle(theta, bits)
        assert p.depth == policy.depth >= -(-bits // 2) + 2
        assert theta / (1 << p.depth) <= Fraction(1, 8)
        assert p.frac_bits == bits + 2 * p.depth + 8
        assert p.sin_enc.width <= Fraction(1, 1 << bits)
        assert p.cos_enc.width <= Fraction(1, 1 << bits)

    @settings(max_examples=50)
    @given(angles)
    def test_soundness_and_range(self, theta):
        p = sin_cos(theta, 128)
        assert p.sin_enc.contains(oracle_sin(theta, p.frac_bits + 8).midpoint)
        assert p.cos_enc.contains(oracle_cos(theta, p.frac_bits + 8).midpoint)
        assert p.sin_enc.lo >= 0 and p.sin_enc.hi <= 1
        assert p.cos_enc.lo >= 0 and p.cos_enc.hi <= 1

    def test_deterministic(self):
        sin_cos.cache_clear()
        a = sin_cos(Fraction(7, 9), 100)
        sin_cos.cache_clear()
        b = sin_cos(Fraction(7, 9), 100)
        assert a == b and a is not b


class TestComplement:
    def test_involution(self):
        p = sin_cos(Fraction(2, 3), 64)
        assert complement(complement(p)) == p
        c = complement(p)
        assert isinstance(c.theta, ComplementAngle)
        assert c.sin_enc.width == p.cos_enc.width and c.cos_enc.width == p.sin_enc.width

    def test_thirty_to_sixty(self):
        theta, err = lattice_angle(30)
        c = complement(sin_cos(theta, 128))
        assert encloses_qnum(c.sin_enc, exact_sin(60), err)
        assert encloses_qnum(c.cos_enc, exact_cos(60), err)

    def test_complement_angle_enclosure(self):
        theta, _ = lattice_angle(30)
        c = complement(sin_cos(theta, 64))
        sixty, _ = lattice_angle(60)
        assert c.theta.enclose(100).contains(sixty)
        assert c.theta.enclose(100).width <= Fraction(1, 1 << 100)


class TestChord:
    def test_equilateral(self):
        theta, err = lattice_angle(60)
        assert iv_widen(chord_length(theta, 128), err).contains(1)

    def test_one_radian(self):
        ch = chord_length(1, 128)
        assert meets_reference(ch, "2sin(1/2)")
        assert ch.width <= Fraction(2, 1 << 128)

    @given(angles)
    def test_definitional(self, theta):
        assert chord_length(theta, 64) == iv_scale2(sin_cos(theta / 2, 64).sin_enc, 1)

    def test_domain(self):
        with pytest.raises(DomainError):
            chord_length(2, 64)

    @pytest.mark.parametrize("theta", [Fraction(1, 3), Fraction(1), Fraction(3, 2)])
    def test_monotone_doubling_limit(self, theta):
        seq = [iv_scale2(sin_cos(theta / (1 << n), 128).sin_enc, n) for n in range(0, 41)]
        for a, b in zip(seq, seq[1:]):
            assert b.lo.to_rational() >= a.hi.to_rational() - (a.width + b.width).to_rational()
        assert all(s.lo < theta for s in seq)


class TestFigure3:
    def test_sixty(self):
        theta, _ = lattice_angle(60)
        for r in figure3_residuals(theta, 128):
            assert r.contains(0)

    @pytest.mark.parametrize("bits", [8, 64, 128])
    def test_one_radian(self, bits):
        for r in figure3_residuals(1, bits):
            assert r.contains(0)
            assert r.width <= Fraction(8, 1 << bits)

    def test_pure(self):
        a = figure3_residuals(Fraction(5, 4), 80)
        sin_cos.cache_clear()
        assert figure3_residuals(Fraction(5, 4), 80) == a


def test_check_angle_parses():
    assert check_angle("1/3") == Fraction(1, 3)
    with pytest.raises(DomainError):
        check_angle("abc")
