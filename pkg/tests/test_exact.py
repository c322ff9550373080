from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from halfangle.exact import (
    LATTICE,
    SQRT2,
    SQRT3,
    SQRT6,
    QNum,
    derivation_checks,
    exact_cos,
    exact_identity_suite,
    exact_sin,
    qn_add,
    qn_eq,
    qn_mul,
    qn_neg,
    sqrt_enclosure,
)
from halfangle.kernel import sin_cos
from halfangle.oracle import pi_enclosure

coeff = st.fractions(min_value=-10, max_value=10, max_denominator=50)
qnums = st.builds(QNum, coeff, coeff, coeff, coeff)


def test_basis_products():
    assert qn_mul(SQRT2, SQRT3) == SQRT6
    assert qn_mul(SQRT2, SQRT2) == QNum(2)
    assert qn_mul(SQRT6, SQRT6) == QNum(6)
    assert SQRT2 * SQRT6 == QNum(0, 0, 2)
    assert SQRT3 * SQRT6 == QNum(0, 3)


def test_table_values():
    q = Fraction(1, 4)
    assert exact_sin(15) == QNum(0, -q, 0, q)
    assert exact_cos(15) == QNum(0, q, 0, q)
    assert exact_sin(60) == exact_cos(30) == QNum(0, 0, Fraction(1, 2))
    assert exact_sin(15) ** 2 == QNum(Fraction(1, 2), 0, Fraction(-1, 4))
    assert 1 - 2 * exact_sin(15) ** 2 == exact_cos(30)
    assert 2 * exact_sin(15) * exact_cos(15) == exact_sin(30)


def test_unknown_angle():
    with pytest.raises(ValueError):
        exact_sin(20)


def test_derivation_chain():
    assert all(c.passed for c in derivation_checks())


def test_identity_suite_all_pass():
    checks = exact_identity_suite()
    failed = [c for c in checks if not c.passed]
    assert not failed, failed
    groups = {c.suite for c in checks}
    assert groups >= {"pythagoras", "complement", "half-angle-sq-diff", "half-angle-cos",
                      "half-angle-sin", "figure3", "addition", "subtraction", "derivation"}
    names = {c.name for c in checks}
    assert "cos(45-30)" in names and "cos(30+45)" in names


@pytest.mark.parametrize("t", LATTICE)
def test_pythagoras_exact(t):
    assert exact_sin(t) ** 2 + exact_cos(t) ** 2 == 1


def test_broken_table_is_caught():
    # perturbing a single coefficient must break the exact identity
    bad = exact_sin(15) + QNum(Fraction(1, 10**9))
    assert bad**2 + exact_cos(15) ** 2 != 1


@settings(max_examples=300)
@given(qnums, qnums, qnums)
def test_field_axioms(x, y, z):
    assert qn_add(x, y) == qn_add(y, x)
    assert qn_mul(x, y) == qn_mul(y, x)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert qn_add(x, qn_neg(x)) == QNum()


@given(qnums, qnums)
def test_equality_is_componentwise(x, y):
    assert qn_eq(x, y) == (x.coefficients == y.coefficients)


@given(qnums, qnums)
def test_integral_domain(x, y):
    if x != QNum() and y != QNum():
        assert x * y != QNum()


@given(qnums, st.integers(16, 160))
def test_to_interval_sound(x, bits):
    iv = x.to_interval(bits)
    assert iv.width <= Fraction(1, 1 << (bits - 6))
    assert iv.contains_interval(x.to_interval(bits + 40).rescale(bits + 40))
    assert abs(float(iv.midpoint) - float(x)) < 2.0 ** (6 - bits) + 1e-12 * (1 + abs(float(x)))


@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_sqrt_enclosure(k):
    s = sqrt_enclosure(k, 100)
    assert s.lo.to_rational() ** 2 <= k <= s.hi.to_rational() ** 2
    assert s.width <= Fraction(1, 1 << 100)


@pytest.mark.parametrize("degrees", LATTICE)
def test_kernel_cross_check(degrees):
    bits = 128
    pi = pi_enclosure(256)
    theta = pi.midpoint * degrees / 180
    err = (pi.hi.to_rational() - pi.lo.to_rational()) * degrees / 180
    p = sin_cos(theta, bits)
    for enc, value in ((p.sin_enc, exact_sin(degrees)), (p.cos_enc, exact_cos(degrees))):
        v = value.to_interval(2 * bits)
        assert enc.lo.to_rational() - err <= v.lo.to_rational()
        assert v.hi.to_rational() <= enc.hi.to_rational() + err


def test_sign():
    assert (SQRT2 - Fraction(141421356, 10**8)).sign() == 1
    assert (SQRT3 - Fraction(17320509, 10**7)).sign() == -1
    assert QNum().sign() == 0
