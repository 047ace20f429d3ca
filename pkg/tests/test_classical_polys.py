"""Classical Bernoulli/Euler polynomials and numbers.

The frozen coefficient tables below were derived independently from the
generating functions (and cross-checked against mpmath's bernpoly/eulerpoly
at the bottom of the file); the library must reproduce them exactly.
"""

from fractions import Fraction

import mpmath
import pytest

from telesum import (
    Poly,
    bernoulli_number,
    bernoulli_poly,
    euler_number,
    euler_poly,
    poly_derivative,
    poly_eval,
    poly_integral_01,
    poly_reflect,
    precompute,
)

F = Fraction

BERNOULLI_POLYS = {
    0: [F(1)],
    1: [F(-1, 2), F(1)],
    2: [F(1, 6), F(-1), F(1)],
    3: [F(0), F(1, 2), F(-3, 2), F(1)],
    4: [F(-1, 30), F(0), F(1), F(-2), F(1)],
    5: [F(0), F(-1, 6), F(0), F(5, 3), F(-5, 2), F(1)],
    6: [F(1, 42), F(0), F(-1, 2), F(0), F(5, 2), F(-3), F(1)],
}

EULER_POLYS = {
    0: [F(1)],
    1: [F(-1, 2), F(1)],
    2: [F(0), F(-1), F(1)],
    3: [F(1, 4), F(0), F(-3, 2), F(1)],
    4: [F(0), F(1), F(0), F(-2), F(1)],
    5: [F(-1, 2), F(0), F(5, 2), F(0), F(-5, 2), F(1)],
}


def test_frozen_bernoulli_polynomials():
    for k, coeffs in BERNOULLI_POLYS.items():
        assert bernoulli_poly(k) == Poly(coeffs), "index %d" % k


def test_frozen_euler_polynomials():
    for k, coeffs in EULER_POLYS.items():
        assert euler_poly(k) == Poly(coeffs), "index %d" % k


def test_bernoulli_numbers():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == F(-1, 2)
    assert bernoulli_number(2) == F(1, 6)
    assert bernoulli_number(4) == F(-1, 30)
    assert bernoulli_number(12) == F(-691, 2730)
    assert bernoulli_number(20) == F(-174611, 330)
    for odd in range(3, 31, 2):
        assert bernoulli_number(odd) == 0


def test_euler_numbers():
    assert euler_number(0) == 1
    assert euler_number(2) == -1
    assert euler_number(4) == 5
    assert euler_number(6) == -61
    assert euler_number(8) == 1385
    assert euler_number(10) == -50521
    for k in range(0, 21, 2):
        assert euler_number(k).denominator == 1
    # odd indices are rejected in this normalization, not zero
    for odd in (1, 3, 7):
        with pytest.raises(ValueError):
            euler_number(odd)


def test_derivative_ladders_exact():
    for n in range(1, 31):
        assert poly_derivative(bernoulli_poly(n)) == bernoulli_poly(n - 1) * F(n)
        assert poly_derivative(euler_poly(n)) == euler_poly(n - 1) * F(n)


def test_reflection_symmetry():
    # p(1 - x) == (-1)^n p(x) for both families
    for n in range(0, 25):
        sign = F(1) if n % 2 == 0 else F(-1)
        assert poly_reflect(bernoulli_poly(n)) == bernoulli_poly(n) * sign
        assert poly_reflect(euler_poly(n)) == euler_poly(n) * sign


def test_vanishing_points():
    for k in range(1, 13):
        b = bernoulli_poly(2 * k + 1)
        assert poly_eval(b, F(0)) == 0
        assert poly_eval(b, F(1, 2)) == 0
        assert poly_eval(b, F(1)) == 0
        e = euler_poly(2 * k)
        assert poly_eval(e, F(0)) == 0
        assert poly_eval(e, F(1)) == 0


def test_unit_interval_normalizations():
    assert poly_integral_01(bernoulli_poly(0)) == 1
    for n in range(1, 21):
        assert poly_integral_01(bernoulli_poly(n)) == 0
        assert poly_eval(bernoulli_poly(n), F(1)) - poly_eval(
            bernoulli_poly(n), F(0)
        ) == (1 if n == 1 else 0)


def test_midpoint_values():
    # 2^n E_n(1/2) is the n-th Euler number, B_n(1/2) = (2^(1-n) - 1) B_n
    for n in range(0, 21, 2):
        assert poly_eval(euler_poly(n), F(1, 2)) * 2**n == euler_number(n)
    for n in range(1, 21, 2):
        assert poly_eval(euler_poly(n), F(1, 2)) * 2**n == 0
    for n in range(0, 21):
        assert poly_eval(bernoulli_poly(n), F(1, 2)) == (
            F(2) ** (1 - n) - 1
        ) * bernoulli_number(n)


def test_against_mpmath_polynomials():
    """Independent oracle: float evaluation matches mpmath to ~1 ulp."""
    xs = [0.0, 0.125, 0.3, 0.5, 0.77, 1.0]
    with mpmath.workdps(30):
        for n in range(0, 21):
            bp, ep = bernoulli_poly(n), euler_poly(n)
            for x in xs:
                xf = F(x)
                got_b = float(poly_eval(bp, xf))
                got_e = float(poly_eval(ep, xf))
                want_b = float(mpmath.bernpoly(n, x))
                want_e = float(mpmath.eulerpoly(n, x))
                assert got_b == pytest.approx(want_b, rel=1e-13, abs=1e-25)
                assert got_e == pytest.approx(want_e, rel=1e-13, abs=1e-25)


def test_cache_grows_past_precomputed_depth():
    precompute(8)  # no-op shrink request must not discard deeper entries
    assert bernoulli_poly(70).degree == 70
    assert euler_poly(70).degree == 70
    # classical von Staudt-Clausen denominator check at depth 70
    denom = bernoulli_number(70).denominator
    assert denom % 6 == 0
