import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

from orbitft.errors import DomainError
from orbitft.specfun import (QuantumNumbers, double_factorial, gegenbauer, generating_partial,
                             jacobi, laguerre, laguerre_bs, laguerre_multiplication, log_pochhammer,
                             pochhammer, reduced_bessel, solid_harmonic)

from conftest import rel


@pytest.mark.parametrize("a,k,expected", [(5.5, 0, 1), (3, 4, 360), (-2, 3, 0)])
def test_pochhammer_examples(a, k, expected):
    assert pochhammer(a, k) == expected


def test_log_pochhammer_matches_product():
    s, lg = log_pochhammer(-4.0, 3)
    assert s * math.exp(lg) == pytest.approx(-4 * -3 * -2)
    assert log_pochhammer(-2, 3)[0] == 0


@pytest.mark.parametrize("k,expected", [(-1, 1), (0, 1), (5, 15), (6, 48)])
def test_double_factorial(k, expected):
    assert double_factorial(k) == expected


def test_double_factorial_rejects_below_minus_one():
    with pytest.raises(DomainError):
        double_factorial(-2)


@pytest.mark.parametrize("n,a,z,expected", [(0, 3.3, 7.0, 1.0), (1, 2, 1.5, 1.5), (2, 0, 1, -0.5)])
def test_laguerre_examples(n, a, z, expected):
    assert laguerre(n, a, z) == pytest.approx(expected, abs=1e-15)


def test_laguerre_recurrence_vs_series():
    for n in range(11):
        for a in (0, 1, 2.5, 3):
            for z in np.linspace(0, 20, 41):
                r1 = laguerre(n, a, z)
                r2 = laguerre(n, a, z, method="series")
                assert rel(r2, r1) < 1e-12


def test_laguerre_against_mpmath():
    for n in (3, 7, 15):
        for z in (0.3, 4.0, 11.0):
            assert rel(laguerre(n, 1.5, z), float(mp.laguerre(n, 1.5, z))) < 1e-12


def test_laguerre_vectorized():
    z = np.array([0.0, 1.0, 2.0])
    out = laguerre(2, 0, z)
    assert out.shape == (3,)
    assert out[1] == pytest.approx(-0.5)


def test_laguerre_bs_examples():
    assert laguerre_bs(2, 0, 1) == pytest.approx(-1)
    for q in range(6):
        assert laguerre_bs(q, 0, 0) == pytest.approx(math.factorial(q))
    for z in (0.0, 2.0, 9.0):
        assert laguerre_bs(1, 1, z) == pytest.approx(-1)


def test_laguerre_bs_identity():
    for n in range(9):
        for m in range(9 - n):
            for z in (0.4, 3.1, 8.0):
                lhs = laguerre_bs(n + m, m, z)
                rhs = (-1) ** m * math.factorial(n + m) * laguerre(n, m, z)
                assert abs(lhs - rhs) <= 1e-12 * max(abs(rhs), 1e-12)


def _mult_sum(n, a, scale, x):
    return sum(c * laguerre(deg, a, x) for c, deg in laguerre_multiplication(n, a, scale))


def test_laguerre_multiplication_examples():
    coeffs = laguerre_multiplication(4, 1.0, 1.0)
    # entries are (coefficient, degree n - m)
    assert [(c, deg) for c, deg in coeffs if c != 0] == [(1.0, 4)]
    coeffs = dict((1 - deg, c) for c, deg in laguerre_multiplication(1, 0, 2))
    assert coeffs[0] == pytest.approx(2) and coeffs[1] == pytest.approx(-1)
    assert _mult_sum(1, 0, 2, 1) == pytest.approx(laguerre(1, 0, 2.0))
    assert _mult_sum(2, 1, 0.5, 2) == pytest.approx(laguerre(2, 1, 1.0))


@given(st.integers(0, 10), st.floats(0, 4), st.floats(0.1, 3), st.floats(0, 10))
def test_laguerre_multiplication_property(n, a, scale, x):
    assert abs(_mult_sum(n, a, scale, x) - laguerre(n, a, scale * x)) < 1e-9 * max(1, abs(laguerre(n, a, scale * x)))


@pytest.mark.parametrize("n,lam,x,expected", [(0, 0.7, 0.2, 1), (1, 2, 0.3, 1.2), (2, 1, 0, -1)])
def test_gegenbauer_examples(n, lam, x, expected):
    assert gegenbauer(n, lam, x) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("n,a,b,x,expected", [(0, 0.3, 2, 0.1, 1), (1, 1, 1, 0, 0), (1, 1.5, 0.5, 0.2, 0.9)])
def test_jacobi_examples(n, a, b, x, expected):
    assert jacobi(n, a, b, x) == pytest.approx(expected, abs=1e-15)


def test_gegenbauer_and_jacobi_hypergeometric_route():
    for n in range(31):
        for x in (-0.9, -0.3, 0.25, 0.8):
            g1 = gegenbauer(n, 1.5, x)
            g2 = gegenbauer(n, 1.5, x, method="hyp2f1")
            assert abs(g1 - g2) <= 1e-12 * max(abs(g1), 1.0)
            j1 = jacobi(n, 1.5, 0.5, x)
            j2 = jacobi(n, 1.5, 0.5, x, method="hyp2f1")
            assert abs(j1 - j2) <= 1e-12 * max(abs(j1), 1.0)


def test_gegenbauer_jacobi_vs_mpmath():
    for n in (2, 9, 20):
        assert rel(gegenbauer(n, 2.5, 0.37), float(mp.gegenbauer(n, 2.5, 0.37))) < 1e-12
        assert rel(jacobi(n, 2.5, 1.5, -0.41), float(mp.jacobi(n, 2.5, 1.5, -0.41))) < 1e-12


def test_reduced_bessel_examples():
    assert reduced_bessel(0, 1.7) == pytest.approx(math.exp(-1.7), rel=1e-15)
    assert reduced_bessel(1, 2) == pytest.approx(3 * math.exp(-2), rel=1e-15)
    assert reduced_bessel(2, 1) == pytest.approx(7 * math.exp(-1), rel=1e-15)


def test_reduced_bessel_vs_besselk():
    for n in range(6):
        for z in (0.2, 1.0, 6.5):
            ref = mp.sqrt(2 / mp.pi) * mp.power(z, n + 0.5) * mp.besselk(n + 0.5, z)
            assert rel(reduced_bessel(n, z), float(ref)) < 1e-13


@given(st.integers(0, 25), st.floats(0, 60))
def test_reduced_bessel_positive(n, z):
    assert reduced_bessel(n, z) > 0


def test_solid_harmonic_examples():
    assert solid_harmonic(0, 0, (3.0, -1.0, 2.0)) == pytest.approx(0.2820948, abs=1e-7)
    assert solid_harmonic(1, 0, (0, 0, 2)) == pytest.approx(0.9772050, abs=1e-7)
    v = solid_harmonic(1, 0, (0, 0, 1), imaginary_scale=True)
    assert v.real == 0 and v.imag == pytest.approx(-0.4886025, abs=1e-7)


def test_solid_harmonic_matches_mpmath_ylm():
    # Condon-Shortley, complex harmonics
    v = (0.3, -0.7, 0.45)
    r = math.sqrt(sum(c * c for c in v))
    theta, phi = math.acos(v[2] / r), math.atan2(v[1], v[0])
    for l in range(5):
        for m in range(-l, l + 1):
            ref = complex(mp.spherharm(l, m, theta, phi)) * r ** l
            assert abs(solid_harmonic(l, m, v) - ref) < 1e-13


@given(st.integers(0, 6), st.data(),
       st.tuples(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3)))
def test_solid_harmonic_phase_rotation(l, data, v):
    m = data.draw(st.integers(-l, l))
    plain = solid_harmonic(l, m, v)
    rotated = solid_harmonic(l, m, v, imaginary_scale=True)
    expect = {0: (plain.real, plain.imag), 1: (plain.imag, -plain.real),
              2: (-plain.real, -plain.imag), 3: (-plain.imag, plain.real)}[l % 4]
    assert (rotated.real, rotated.imag) == expect


def test_generating_examples():
    assert generating_partial("laguerre", (0.7, 2.0), 0.0, 1) == (1.0, 1.0)
    part, closed = generating_partial("gegenbauer", (1.0, 1.0), 0.5, 60)
    assert closed == pytest.approx(4.0) and abs(part - 4.0) < 1e-9
    part, closed = generating_partial("gegenbauer_modified", (1.0, 0.0), 0.4, 80)
    assert closed == pytest.approx((1 - 0.16) / 1.16 ** 2)
    assert abs(part - closed) < 1e-12


def test_generating_tail_decays():
    for which, params in (("laguerre", (1.5, 0.8)), ("gegenbauer", (0.8, 0.3))):
        errs = [abs(generating_partial(which, params, 0.5, n)[0] - generating_partial(which, params, 0.5, n)[1])
                for n in range(10, 40, 5)]
        for e0, e1 in zip(errs, errs[1:]):
            assert e1 <= e0 + 1e-14


def test_generating_rejects_outside_disk():
    with pytest.raises(DomainError):
        generating_partial("laguerre", (1, 1), 1.0, 10)


def test_quantum_numbers_validation():
    QuantumNumbers(3, 2, -2).validate()
    for bad in ((0, 0, 0), (2, 2, 0), (2, 1, 2)):
        with pytest.raises(DomainError):
            QuantumNumbers(*bad).validate()
