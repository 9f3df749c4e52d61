import cmath
import math

import mpmath as mp
import pytest
from hypothesis import assume, given, settings, strategies as st

from orbitft.errors import DomainError, SeriesConvergenceError
from orbitft.hyp import (Hyp2F1Term, TransformKind, hyp1f1, hyp2f1, hyp2f1_series, hyp3f2, pfq,
                         transform_2f1)
from orbitft.momentum import HankelVariant, hankel_exp_bessel

from conftest import rel


@pytest.mark.parametrize("a,b,z,expected", [(0, 2.5, 3.0, 1.0), (-1, -2, 4, 3.0), (-2, 3, 1, 1 - 2 / 3 + 1 / 12)])
def test_hyp1f1_examples(a, b, z, expected):
    assert hyp1f1(a, b, z) == pytest.approx(expected, rel=1e-15)


def test_hyp1f1_vs_mpmath():
    for a, b, z in ((0.5, 1.5, -7.0), (-12, 2, 9.0), (2.2, 3.1, 14.0), (-30, 4, 25.0)):
        assert rel(hyp1f1(a, b, z), float(mp.hyp1f1(a, b, z))) < 1e-13


def test_hyp2f1_examples():
    assert hyp2f1(Hyp2F1Term(1.3, -0.4, 2.2, 0.0, 3.5)) == 3.5
    assert hyp2f1(Hyp2F1Term(-1, 2, 3, 0.5)).real == pytest.approx(2 / 3, rel=1e-15)
    assert hyp2f1(Hyp2F1Term(1, 1, 2, 0.5)).real == pytest.approx(2 * math.log(2), rel=1e-15)


def test_hyp2f1_refuses_outside_disk():
    with pytest.raises(DomainError):
        hyp2f1_series(0.5, 1.5, 2.0, 1.2)
    with pytest.raises(DomainError):
        hyp2f1_series(0.5, 1.5, 2.0, 0.9 + 0.9j)
    # terminating series are fine anywhere
    assert hyp2f1_series(-2, 1, 1, 3.0) == pytest.approx(1 - 6 + 9)


def test_hyp2f1_vs_mpmath():
    cases = [(0.3, 1.7, 2.5, 0.6), (2.5, 3.0, 1.5, -0.8), (-25, 28, 2, 0.95), (-40, 45.5, 1.5, 0.3),
             (1.0, 2.0, 3.5, 0.3 + 0.4j)]
    for a, b, c, z in cases:
        assert rel(complex(hyp2f1_series(a, b, c, z)), complex(mp.hyp2f1(a, b, c, z))) < 1e-13


def test_nonterminating_cap_signals_failure():
    with pytest.raises(SeriesConvergenceError):
        pfq((1.0, 1.0), (1.0,), 0.9999999)


def test_hyp3f2_examples():
    assert hyp3f2(1.1, 2.2, 3.3, 4.4, 5.5, 0.0) == 1
    assert hyp3f2(-1, 2, 3, 4, 5, 1) == pytest.approx(0.7, rel=1e-15)
    assert hyp3f2(-1, 2, 5, 5, 3, 0.5) == pytest.approx(2 / 3, rel=1e-15)
    with pytest.raises(DomainError):
        hyp3f2(0.5, 2, 3, 4, 5, 0.5)


def test_hyp3f2_vs_mpmath():
    assert rel(hyp3f2(-7, 9.5, 2, 3.25, 2.75, 0.8), float(mp.hyp3f2(-7, 9.5, 2, 3.25, 2.75, 0.8))) < 1e-13


@pytest.mark.parametrize("k", [0, 1, 2, 5, 17])
def test_termination_length(k):
    _, count = pfq((-k, 2.5), (1.5,), 0.7, with_count=True)
    assert count == k + 1


def test_wider_type_is_summed_in_its_own_arithmetic():
    # the sum has condition number ~1e22, so 60 digits leave about 38
    with mp.workdps(60):
        v = pfq((mp.mpf(-30), mp.mpf(33)), (mp.mpf(2),), mp.mpf("0.95"))
        assert isinstance(v, mp.mpf)
        assert abs(v - mp.hyp2f1(-30, 33, 2, mp.mpf("0.95"))) < mp.mpf(10) ** -30


def test_transform_examples():
    t = Hyp2F1Term(-1, 2, 3, 0.5)
    e = transform_2f1(t, TransformKind.EULER)
    assert (e.a, e.b, e.c) == (4, 1, 3)
    assert e.prefactor == pytest.approx(0.25)
    assert hyp2f1(e).real == pytest.approx(2 / 3, rel=1e-14)
    pa = transform_2f1(t, TransformKind.PFAFF_A)
    assert (pa.a, pa.b, pa.c) == (-1, 1, 3) and pa.argument == pytest.approx(-1)
    assert hyp2f1(pa).real == pytest.approx(2 / 3, rel=1e-15)


def test_qt32_real_argument_form():
    # 2F1(l+1, n+l+2... reordered so that c = 2b) at n=2, l=1, alpha=1.3, p=0.7
    n, l, alpha, p = 2, 1, 1.3, 0.7
    w = complex(alpha, p)
    t = Hyp2F1Term(n + l + 2, l + 1, 2 * l + 2, 2j * p / w, 1 / w ** (n + l + 2))
    q = transform_2f1(t, TransformKind.QT32)
    assert abs(complex(q.argument).imag) < 1e-15
    assert abs(hyp2f1(q) - hyp2f1(t)) < 1e-12 * abs(hyp2f1(t))


def test_transform_pattern_guards():
    with pytest.raises(DomainError):
        transform_2f1(Hyp2F1Term(1.0, 2.0, 3.0, 0.3), TransformKind.QT17)
    with pytest.raises(DomainError):
        transform_2f1(Hyp2F1Term(1.0, 2.0, 3.0, 0.3), TransformKind.QT32)


# -- value preservation, 200 draws per kind -----------------------------------

ks = st.integers(0, 12)
cs = st.floats(0.6, 6.0)
bs = st.floats(-3.0, 3.0)


def _clear_of_integers(*xs):
    # parameters within 1e-9 of a nonpositive integer are snapped to it by design
    return all(abs(x - round(x)) > 1e-6 for x in xs)


def _draw(kind, k, b, c, z):
    if kind is TransformKind.EULER:
        return Hyp2F1Term(-k, b, c, z)
    if kind is TransformKind.PFAFF_A:
        return Hyp2F1Term(-k, b, c, z)
    if kind is TransformKind.PFAFF_B:
        return Hyp2F1Term(b, -k, c, z)
    if kind is TransformKind.QT32:
        return Hyp2F1Term(-k, c / 2, c, z)
    # quadratic patterns need b = a + 1/2; a = -k/2 makes one side terminate
    return Hyp2F1Term(-k / 2, -k / 2 + 0.5, c, z)


Z_RANGES = {
    TransformKind.EULER: (-0.9, 0.9),
    TransformKind.PFAFF_A: (-0.9, 0.45),
    TransformKind.PFAFF_B: (-0.9, 0.45),
    TransformKind.QT17: (-0.9, 0.9),
    TransformKind.QT18_PLUS: (0.0, 0.9),
    TransformKind.QT18_MINUS: (0.0, 0.9),
    TransformKind.QT19: (-0.9, 0.9),
    TransformKind.QT32: (-0.9, 0.9),
}


@pytest.mark.parametrize("kind", list(TransformKind))
def test_value_preservation(kind):
    lo, hi = Z_RANGES[kind]

    @settings(max_examples=200)
    @given(ks, bs, cs, st.floats(lo, hi))
    def check(k, b, c, z):
        assume(_clear_of_integers(b, c, c - b, c / 2, c - 0.5, 2 * c))
        before = _draw(kind, k, b, c, z)
        after = transform_2f1(before, kind)
        v0, v1 = hyp2f1(before), hyp2f1(after)
        assert abs(v0 - v1) <= 1e-11 * abs(v0)

    check()


@settings(max_examples=200)
@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(0.6, 6), st.floats(-0.9, 0.9),
       st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False))
def test_euler_involution(a, b, c, z, pref):
    t = Hyp2F1Term(a, b, c, z, pref)
    tt = transform_2f1(transform_2f1(t, TransformKind.EULER), TransformKind.EULER)
    assert abs(tt.a - a) <= 1e-13 * max(1, abs(a))
    assert abs(tt.b - b) <= 1e-13 * max(1, abs(b))
    assert tt.c == c and tt.argument == t.argument
    assert abs(tt.prefactor - t.prefactor) <= 1e-13 * max(abs(t.prefactor), 1e-300)


@settings(max_examples=100)
@given(st.floats(0.1, 3), st.floats(0.1, 3), st.floats(0.5, 4), st.floats(0.01, 1.0))
def test_realness_symmetry(mu, nu, a, frac):
    b = frac * a / math.sqrt(3) * 0.99
    plus = hankel_exp_bessel(mu, nu, a, b, HankelVariant.COMPLEX_2F1_PLUS)
    minus = hankel_exp_bessel(mu, nu, a, b, HankelVariant.COMPLEX_2F1_MINUS)
    assert abs(plus - minus.conjugate()) <= 1e-12 * abs(plus)
    total = plus + minus
    assert abs(total.imag) <= 1e-12 * abs(total)


def test_hankel_examples():
    assert hankel_exp_bessel(1.5, 0.5, 1.0, 0.0, HankelVariant.REAL_2F1) == 0
    v = hankel_exp_bessel(1.5, 0.5, 1.0, 1.0, HankelVariant.REAL_2F1)
    assert v.real == pytest.approx(math.sqrt(2 / math.pi) / 2, rel=1e-13)
    assert hankel_exp_bessel(0.5, 0.5, 1.0, 1.0, HankelVariant.BESSEL_K).real == pytest.approx(0.5, rel=1e-14)


def test_hankel_variants_agree_with_quadrature():
    for mu, nu, a, b in ((1.5, 0.5, 1.0, 0.4), (2.0, 1.0, 2.0, 0.9), (3.5, 2.5, 1.7, 0.6)):
        ref = mp.quad(lambda y: mp.exp(-a * y) * mp.besselj(nu, b * y) * y ** (mu - 1), [0, mp.inf])
        for variant in (HankelVariant.REAL_2F1, HankelVariant.COMPLEX_2F1_PLUS, HankelVariant.COMPLEX_2F1_MINUS):
            assert abs(hankel_exp_bessel(mu, nu, a, b, variant).real - float(ref)) < 1e-12 * abs(float(ref))
    mu, nu, a, b = 0.5, 1.5, 1.3, 0.8
    ref = mp.quad(lambda t: mp.besselk(mu, a * t) * mp.besselj(nu, b * t) * t ** (mu + nu + 1), [0, mp.inf])
    assert hankel_exp_bessel(mu, nu, a, b, HankelVariant.BESSEL_K).real == pytest.approx(float(ref), rel=1e-10)
