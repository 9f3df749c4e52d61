import math

import mpmath as mp
import pytest

from orbitft.errors import DomainError, QuadratureError
from orbitft.momentum import ft_closed_form
from orbitft.oracle import (QuadratureConfig, envelope_radius, fock_limit_error, ft_numeric, integrate,
                            overlap_numeric)
from orbitft.orbitals import OrbitalModel


def model(family, n, l, m=0, exponent=1.0, k=None):
    return OrbitalModel.make(family, n, l, m, exponent, k=k)


def test_ft_numeric_examples():
    v = ft_numeric(model("hydrogen", 1, 0), 0.0)
    assert abs(v - 2 * math.sqrt(2) / math.pi) < 1e-10
    assert ft_numeric(model("lambda", 3, 2), 0.0) == 0
    b = model("bfunction", 2, 1, 0, 2.0)
    ref = ft_closed_form(b, 1.5)
    assert abs(ft_numeric(b, 1.5) - ref) <= 1e-9 * abs(ref)


def test_integrate_against_known_integrals():
    import numpy as np
    assert integrate(lambda r: np.exp(-r) * r ** 3, 0.0, 60.0) == pytest.approx(6.0, rel=1e-13)
    assert integrate(lambda r: np.sin(r) ** 2, 0.0, math.pi) == pytest.approx(math.pi / 2, rel=1e-13)


def test_quadrature_failure_reports_estimates():
    import numpy as np
    cfg = QuadratureConfig(rel_tol=1e-14, max_refinements=1)
    with pytest.raises(QuadratureError) as info:
        integrate(lambda r: np.sin(200 * r * r), 0.0, 10.0, cfg)
    low, high = info.value.estimates
    assert low is not None and high is not None


def test_config_validation():
    with pytest.raises(DomainError):
        QuadratureConfig(rel_tol=0)
    with pytest.raises(DomainError):
        QuadratureConfig(r_max=-1)


def test_envelope_radius():
    r = envelope_radius(1.0, 0.0)
    assert r == pytest.approx(41.0, rel=1e-6)
    assert envelope_radius(2.0, 10.0) > envelope_radius(2.0, 0.0)


def test_self_consistency_under_tighter_tolerance():
    for m in (model("hydrogen", 4, 1), model("guseinov", 3, 2, 0, 1.2, k=1.5), model("slater", 5, 0, 0, 0.8)):
        for p in (0.3, 2.5):
            a = ft_numeric(m, p, QuadratureConfig(rel_tol=1e-8))
            b = ft_numeric(m, p, QuadratureConfig(rel_tol=5e-9))
            assert abs(a - b) < 1e-8 * abs(b)


def test_overlap_examples():
    h1, h2 = model("hydrogen", 1, 0), model("hydrogen", 2, 0)
    assert abs(overlap_numeric(h1, h1) - 1) < 1e-8
    assert abs(overlap_numeric(h1, h2)) < 1e-8
    g2, g3 = model("guseinov", 2, 0, 0, 1.3, k=1), model("guseinov", 3, 0, 0, 1.3, k=1)
    assert abs(overlap_numeric(g2, g3, 1)) < 1e-8


def test_angular_exactness():
    a, b = model("hydrogen", 3, 1, 1), model("hydrogen", 3, 2, 1)
    assert overlap_numeric(a, b) == 0j
    assert overlap_numeric(a, model("hydrogen", 3, 1, 0)) == 0j


def test_hermiticity():
    a, b = model("lambda", 3, 1, 0, 0.9), model("sturmian", 4, 1, 0, 1.4)
    for k in (0, 1, 1.5):
        ab, ba = overlap_numeric(a, b, k), overlap_numeric(b, a, k)
        assert abs(ab - ba.conjugate()) <= 1e-13 * max(abs(ab), 1.0)


def test_fock_limit_expression_vs_mpmath():
    # the frozen limit constant, checked with brute-force 1F1 sums at high precision
    with mp.workdps(40):
        for l, Z, r in ((0, 1, 1.0), (1, 1, 2.0), (2, 2.0, 0.7)):
            x = mp.mpf(2) * Z * r
            limit = mp.gamma(2 * l + 2) * x ** (-(2 * l + 1) / mp.mpf(2)) * mp.besselj(2 * l + 1, mp.sqrt(4 * x))
            for n in (50, 100, 200):
                direct = mp.hyp1f1(-n + l + 1, 2 * l + 2, x / n)
                assert fock_limit_error(l, Z, r, n) == pytest.approx(float(abs(direct - limit)), rel=1e-8)


def test_fock_limit_examples():
    assert fock_limit_error(0, 1, 1, 200) < fock_limit_error(0, 1, 1, 50)
    assert fock_limit_error(1, 1, 2, 400) < fock_limit_error(1, 1, 2, 100)
    assert fock_limit_error(0, 1, 1e-9, 50) < 1e-9
    with pytest.raises(DomainError):
        fock_limit_error(3, 1, 1, 4)
