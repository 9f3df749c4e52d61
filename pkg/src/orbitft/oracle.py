"""Numerical reference values by adaptive radial quadrature.

The plane-wave (Rayleigh) expansion reduces the transform of
R(r) Y_l^m(r̂) to

    sqrt(2/pi) (-i)^l Y_l^m(p̂) \\int_0^inf r^2 R(r) j_l(p r) dr,

which is integrated with Gauss-Legendre panels, bisected until a low and
a high order rule agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import jv, spherical_jn

from .errors import DomainError, QuadratureError
from .hyp import hyp1f1
from .momentum import as_momentum
from .orbitals import Family, OrbitalModel, radial
from .specfun import direction_harmonic

_LOW, _HIGH = 20, 40
_MAX_BREAKPOINTS = 4000


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_refinements: int = 20
    r_max: float | None = None

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("tolerances must be positive")
        if self.max_refinements < 0:
            raise DomainError("max_refinements must be >= 0")
        if self.r_max is not None and not self.r_max > 0:
            raise DomainError("r_max must be positive")


DEFAULT_CONFIG = QuadratureConfig()


@lru_cache(maxsize=None)
def _rule(order: int):
    return np.polynomial.legendre.leggauss(order)


def _panel(f, a: float, b: float, order: int) -> tuple[float, float]:
    x, w = _rule(order)
    half = 0.5 * (b - a)
    y = f(half * x + 0.5 * (a + b))
    return half * float(np.dot(w, y)), half * float(np.dot(w, np.abs(y)))


def decay_rate(model: OrbitalModel) -> float:
    """Exponential decay constant of the radial part."""
    if model.family in (Family.SLATER, Family.BFUNCTION, Family.GUSEINOV_ORIGINAL):
        return model.exponent
    return model.beta


def envelope_radius(rate: float, degree: float, drop: float = 41.0) -> float:
    """Radius where x^degree e^{-x}, x = rate r, has fallen e^{-drop} below its peak."""
    d = max(degree, 0.0)
    peak = d * math.log(d) - d if d > 0 else 0.0
    x = max(d, 1.0)
    while d * math.log(x) - x > peak - drop:
        x *= 1.25
    lo, hi = x / 1.25, x
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if d * math.log(mid) - mid > peak - drop:
            lo = mid
        else:
            hi = mid
    return hi / rate


def integrate(f, a: float, b: float, cfg: QuadratureConfig = DEFAULT_CONFIG,
              breakpoints=()) -> float:
    """Adaptive Gauss-Legendre integral of a vectorized real ``f`` on [a, b].

    A panel is accepted when the 20- and 40-point rules agree within its
    share of the tolerance; the tolerance is relative to the integral and
    floored by a multiple of the rounding level of \\int |f|.
    """
    pts = sorted({a, b, *[t for t in breakpoints if a < t < b]})
    panels = list(zip(pts[:-1], pts[1:]))
    crude = [_panel(f, lo, hi, _HIGH) for lo, hi in panels]
    value = sum(c[0] for c in crude)
    scale = sum(c[1] for c in crude)
    tol = max(cfg.rel_tol * abs(value), cfg.abs_tol, 64 * np.finfo(float).eps * scale)
    width = b - a
    total_low = total_high = 0.0
    stack = [(lo, hi, 0) for lo, hi in reversed(panels)]
    while stack:
        lo, hi, depth = stack.pop()
        low = _panel(f, lo, hi, _LOW)[0]
        high = _panel(f, lo, hi, _HIGH)[0]
        if abs(high - low) <= tol * (hi - lo) / width or hi - lo < 1e-12 * width:
            total_low += low
            total_high += high
            continue
        if depth >= cfg.max_refinements:
            raise QuadratureError(
                f"quadrature did not converge on [{lo:.6g}, {hi:.6g}]",
                estimates=(total_low + low, total_high + high))
        mid = 0.5 * (lo + hi)
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    return total_high


def _radial_degree(model: OrbitalModel) -> float:
    # power of r in r^2 R(r) at large r
    return model.n + 1 + (model.l if model.family is Family.BFUNCTION else 0)


def _r_max(model: OrbitalModel, cfg: QuadratureConfig, extra_degree: float = 0.0) -> float:
    if cfg.r_max is not None:
        return cfg.r_max
    return envelope_radius(decay_rate(model), _radial_degree(model) + extra_degree)


def _breakpoints(model: OrbitalModel, p: float, r_max: float) -> list[float]:
    pts = [r_max * t for t in (1 / 64, 1 / 32, 1 / 16, 1 / 8, 1 / 4, 1 / 2)]
    if p * r_max > 20:
        step = math.pi / p
        count = min(int(r_max / step), _MAX_BREAKPOINTS)
        step = r_max / max(count, 1)
        pts.extend(step * j for j in range(1, count))
    return pts


def ft_numeric(model: OrbitalModel, p, cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """Quadrature reference for the transform under the e^{-i p.r} kernel."""
    v = as_momentum(p)
    pn = v.norm
    l, m = model.l, model.m
    if pn == 0 and l > 0:
        return 0j
    r_max = _r_max(model, cfg)

    def f(r):
        return r * r * radial(model, r) * spherical_jn(l, pn * r)

    value = integrate(f, 0.0, r_max, cfg, _breakpoints(model, pn, r_max))
    phase = (1, -1j, -1, 1j)[l % 4]
    angular = direction_harmonic(l, m, v) if pn > 0 else 1 / math.sqrt(4 * math.pi)
    return math.sqrt(2 / math.pi) * phase * angular * value


def overlap_numeric(bra: OrbitalModel, ket: OrbitalModel, weight_power: float = 0.0,
                    cfg: QuadratureConfig = DEFAULT_CONFIG) -> complex:
    """<bra| r^k |ket> over all space; zero without quadrature for different (l, m)."""
    if (bra.l, bra.m) != (ket.l, ket.m):
        return 0j
    k = weight_power
    if cfg.r_max is not None:
        r_max = cfg.r_max
    else:
        rate = decay_rate(bra) + decay_rate(ket)
        degree = _radial_degree(bra) + _radial_degree(ket) + max(k, 0)
        r_max = envelope_radius(rate, degree)

    def f(r):
        return r ** (2 + k) * radial(bra, r) * radial(ket, r)

    return complex(integrate(f, 0.0, r_max, cfg, _breakpoints(bra, 0.0, r_max)))


def fock_limit_error(l: int, Z: float, r: float, n: int) -> float:
    """Distance between the radial 1F1 of a hydrogen state and its large-n Bessel limit.

    1F1(-n+l+1; 2l+2; 2Zr/n) -> Gamma(2l+2) (2Zr)^{-(2l+1)/2} J_{2l+1}(sqrt(8Zr)).
    """
    if n < l + 2:
        raise DomainError("need n >= l + 2")
    if not (Z > 0 and r > 0):
        raise DomainError("need Z > 0 and r > 0")
    direct = hyp1f1(-n + l + 1, 2 * l + 2, 2 * Z * r / n)
    x = 2 * Z * r
    limit = math.exp(math.lgamma(2 * l + 2) - (2 * l + 1) / 2 * math.log(x)) * float(jv(2 * l + 1, math.sqrt(4 * x)))
    return abs(direct - limit)
