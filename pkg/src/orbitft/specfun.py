"""Scalar special functions used by the orbital and transform code.

Conventions: Hartree atomic units, complex spherical harmonics with the
Condon-Shortley phase, modern (Szegő) normalization of the generalized
Laguerre polynomials. Polynomial evaluators accept numpy arrays for the
argument on their recurrence route.
"""

from __future__ import annotations

import cmath
import math
from numbers import Integral
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .hyp import hyp1f1, hyp2f1_series, nonpositive_integer

SQRT_4PI_INV = 1.0 / math.sqrt(4.0 * math.pi)


class QuantumNumbers(NamedTuple):
    n: int
    l: int
    m: int

    def validate(self, *, bound: bool = True) -> "QuantumNumbers":
        """Check ``n >= 1, l >= 0, |m| <= l`` and, if ``bound``, ``l <= n-1``."""
        if self.n < 1 or self.l < 0 or abs(self.m) > self.l:
            raise DomainError(f"invalid quantum numbers {tuple(self)}")
        if bound and self.l > self.n - 1:
            raise DomainError(f"l = {self.l} exceeds n - 1 = {self.n - 1}")
        return self


class Vector3(NamedTuple):
    x: float
    y: float
    z: float

    @property
    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def scaled(self, s: float) -> "Vector3":
        return Vector3(s * self.x, s * self.y, s * self.z)


def as_vector(v) -> Vector3:
    if isinstance(v, Vector3):
        return v
    x, y, z = (float(c) for c in v)
    if not all(math.isfinite(c) for c in (x, y, z)):
        raise DomainError("vector components must be finite")
    return Vector3(x, y, z)


# -- factorial machinery ----------------------------------------------------

def signed_lgamma(x: float) -> tuple[int, float]:
    """(sign of Gamma(x), log|Gamma(x)|); poles raise DomainError."""
    if x <= 0 and x == int(x):
        raise DomainError(f"Gamma has a pole at {x}")
    if x > 0:
        return 1, math.lgamma(x)
    sign = -1 if math.floor(x) % 2 else 1
    return sign, math.lgamma(x)


def log_pochhammer(a: float, k: int) -> tuple[int, float]:
    """(sign, log|(a)_k|); sign 0 when the product contains a zero factor."""
    if k == 0:
        return 1, 0.0
    j = nonpositive_integer(a)
    if j is not None:
        if j < k:
            return 0, -math.inf
        # (-j)_k = (-1)^k j! / (j-k)!
        return (-1) ** k, math.lgamma(j + 1) - math.lgamma(j - k + 1)
    if a > 0:
        return 1, math.lgamma(a + k) - math.lgamma(a)
    s1, l1 = signed_lgamma(a + k)
    s0, l0 = signed_lgamma(a)
    return s1 * s0, l1 - l0


def pochhammer(a, k: int):
    """Rising factorial a(a+1)...(a+k-1).

    Small ``k`` is a direct product in the type of ``a``; long float
    products are assembled in log space and exponentiated once.
    """
    if k < 0:
        raise DomainError("pochhammer needs k >= 0")
    if k <= 64 or not isinstance(a, (float, Integral)):
        out = 1 if isinstance(a, Integral) else a - a + 1
        for j in range(k):
            out = out * (a + j)
        return out
    sign, logabs = log_pochhammer(float(a), k)
    if sign == 0:
        return 0.0
    if logabs > 709.7:
        return sign * math.inf
    return sign * math.exp(logabs)


def double_factorial(k: int) -> int:
    if k < -1:
        raise DomainError("double factorial needs k >= -1")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def log_factorial(k: float) -> float:
    return math.lgamma(k + 1)


# -- orthogonal polynomials -------------------------------------------------

def laguerre(n: int, alpha, z, method: str = "recurrence"):
    """Generalized Laguerre polynomial L_n^(alpha)(z).

    ``method="recurrence"`` is the stable three-term recurrence (numpy
    aware). ``method="series"`` sums (alpha+1)_n/n! 1F1(-n; alpha+1; z);
    it alternates in sign and is kept as a cross-check.
    """
    if n < 0:
        raise DomainError("degree must be >= 0")
    if method == "series":
        return pochhammer(alpha + 1, n) / math.factorial(n) * hyp1f1(-n, alpha + 1, z)
    if method != "recurrence":
        raise ValueError(f"unknown method {method!r}")
    prev = z * 0 + 1
    if n == 0:
        return prev
    cur = alpha + 1 - z
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - z) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def laguerre_bs(subscript: int, superscript: int, z):
    """Bethe-Salpeter associated Laguerre function [L_q^p(z)]_BS.

    Evaluated as (-1)^p q! L_{q-p}^{(p)}(z), which avoids the p-fold
    derivative of the Rodrigues form.
    """
    q, p = subscript, superscript
    if p < 0 or q < 0 or p > q:
        raise DomainError("need 0 <= superscript <= subscript")
    sign = -1 if p % 2 else 1
    return sign * math.factorial(q) * laguerre(q - p, p, z)


def laguerre_multiplication(n: int, alpha: float, scale: float) -> list[tuple[float, int]]:
    """Coefficients of the multiplication theorem.

    Returns ``[(c_m, n - m)]`` with
    ``L_n^(alpha)(scale*x) = sum c_m L_{n-m}^(alpha)(x)``.
    """
    if scale == 0:
        raise DomainError("scale must be nonzero")
    out = []
    binom = 1.0
    for m in range(n + 1):
        if m > 0:
            binom *= (n + alpha - m + 1) / m
        out.append((binom * (1 - scale) ** m * scale ** (n - m), n - m))
    return out


def gegenbauer(n: int, lam, x, method: str = "recurrence"):
    """Gegenbauer polynomial C_n^lam(x).

    ``method="hyp2f1"`` uses (2 lam)_n/n! 2F1(-n, n+2 lam; lam+1/2; (1-x)/2).
    """
    if n < 0:
        raise DomainError("degree must be >= 0")
    if method == "hyp2f1":
        return (pochhammer(2 * lam, n) / math.factorial(n)
                * hyp2f1_series(-n, n + 2 * lam, lam + 0.5, (1 - x) / 2))
    if method != "recurrence":
        raise ValueError(f"unknown method {method!r}")
    prev = x * 0 + 1
    if n == 0:
        return prev
    cur = 2 * lam * x
    for k in range(2, n + 1):
        prev, cur = cur, (2 * x * (k + lam - 1) * cur - (k + 2 * lam - 2) * prev) / k
    return cur


def jacobi(n: int, a, b, x, method: str = "recurrence"):
    """Jacobi polynomial P_n^(a,b)(x).

    ``method="hyp2f1"`` uses binom(n+a, n) 2F1(-n, a+b+n+1; a+1; (1-x)/2).
    """
    if n < 0:
        raise DomainError("degree must be >= 0")
    if method == "hyp2f1":
        binom = pochhammer(a + 1, n) / math.factorial(n)
        return binom * hyp2f1_series(-n, a + b + n + 1, a + 1, (1 - x) / 2)
    if method != "recurrence":
        raise ValueError(f"unknown method {method!r}")
    prev = x * 0 + 1
    if n == 0:
        return prev
    cur = (a + 1) + (a + b + 2) * (x - 1) / 2
    for k in range(2, n + 1):
        s = 2 * k + a + b
        c1 = 2 * k * (k + a + b) * (s - 2)
        c2 = (s - 1) * (s * (s - 2) * x + a * a - b * b)
        c3 = 2 * (k + a - 1) * (k + b - 1) * s
        prev, cur = cur, (c2 * cur - c3 * prev) / c1
    return cur


def reduced_bessel(half_order: int, z):
    """Reduced Bessel function k̂_{n+1/2}(z) for n = ``half_order``.

    Upward recurrence k̂_{j+1/2} = (2j-1) k̂_{j-1/2} + z^2 k̂_{j-3/2}; all
    coefficients are positive, so there is no cancellation.
    """
    if half_order < 0:
        raise DomainError("half_order must be >= 0")
    e = np.exp(-z) if isinstance(z, np.ndarray) else math.exp(-z)
    prev = e
    if half_order == 0:
        return prev
    cur = (1 + z) * e
    z2 = z * z
    for j in range(2, half_order + 1):
        prev, cur = cur, (2 * j - 1) * cur + z2 * prev
    return cur


# -- spherical harmonics ----------------------------------------------------

def _assoc_legendre(l: int, m: int, x: float, sin_theta: float) -> float:
    """P_l^m(x) for m >= 0 with the Condon-Shortley phase."""
    pmm = 1.0
    for j in range(1, m + 1):
        pmm *= -(2 * j - 1) * sin_theta
    if l == m:
        return pmm
    pm1 = x * (2 * m + 1) * pmm
    if l == m + 1:
        return pm1
    for k in range(m + 2, l + 1):
        pmm, pm1 = pm1, ((2 * k - 1) * x * pm1 - (k + m - 1) * pmm) / (k - m)
    return pm1


def spherical_harmonic(l: int, m: int, theta: float, phi: float) -> complex:
    """Complex Y_l^m(theta, phi), Condon-Shortley phase."""
    if l < 0 or abs(m) > l:
        raise DomainError(f"need |m| <= l, got l={l}, m={m}")
    ma = abs(m)
    norm = math.sqrt((2 * l + 1) / (4 * math.pi)
                     * math.exp(math.lgamma(l - ma + 1) - math.lgamma(l + ma + 1)))
    val = norm * _assoc_legendre(l, ma, math.cos(theta), math.sin(theta))
    y = val * cmath.exp(1j * ma * phi)
    if m < 0:
        y = (-1) ** ma * y.conjugate()
    return y


def _rotate_minus_i(value: complex, l: int) -> complex:
    # exact multiplication by (-i)^l
    re, im = value.real, value.imag
    q = l % 4
    if q == 0:
        return complex(re, im)
    if q == 1:
        return complex(im, -re)
    if q == 2:
        return complex(-re, -im)
    return complex(-im, re)


def solid_harmonic(l: int, m: int, arg, imaginary_scale: bool = False) -> complex:
    """Regular solid harmonic r^l Y_l^m(r̂).

    With ``imaginary_scale`` the value at ``-i*arg`` is returned, i.e.
    (-i)^l |arg|^l Y_l^m(arĝ).
    """
    if l < 0 or abs(m) > l:
        raise DomainError(f"need |m| <= l, got l={l}, m={m}")
    v = as_vector(arg)
    r = v.norm
    if r == 0:
        return complex(SQRT_4PI_INV) if l == 0 else 0j
    ma = abs(m)
    rho = math.hypot(v.x, v.y)
    cos_t = v.z / r
    sin_t = rho / r
    norm = math.sqrt((2 * l + 1) / (4 * math.pi)
                     * math.exp(math.lgamma(l - ma + 1) - math.lgamma(l + ma + 1)))
    radial = norm * r ** l * _assoc_legendre(l, ma, cos_t, sin_t)
    if ma:
        phase = complex(v.x, v.y) / rho if rho > 0 else 1.0
        value = radial * phase ** ma
    else:
        value = complex(radial)
    if m < 0:
        value = (-1) ** ma * value.conjugate()
    if imaginary_scale:
        value = _rotate_minus_i(value, l)
    return value


def direction_harmonic(l: int, m: int, arg) -> complex:
    """Y_l^m of the direction of ``arg``; the polar axis when ``arg`` is 0."""
    v = as_vector(arg)
    r = v.norm
    if r == 0:
        return solid_harmonic(l, m, (0.0, 0.0, 1.0))
    return solid_harmonic(l, m, v.scaled(1.0 / r))


# -- generating functions ---------------------------------------------------

def generating_partial(which: str, params, t: float, terms: int) -> tuple[float, float]:
    """N-term partial sum of a generating function and its closed form.

    ``which`` is ``"laguerre"`` (params ``(alpha, x)``), ``"gegenbauer"``
    or ``"gegenbauer_modified"`` (params ``(lam, x)``).
    """
    if abs(t) >= 1:
        raise DomainError("generating functions need |t| < 1")
    if abs(t) > 0.9:
        raise DomainError("partial sums are only offered for |t| <= 0.9")
    p, x = params
    if which == "laguerre":
        closed = math.exp(x * t / (t - 1)) / (1 - t) ** (p + 1)
        coeff = lambda n: laguerre(n, p, x)  # noqa: E731
    elif which == "gegenbauer":
        closed = (1 - 2 * x * t + t * t) ** (-p)
        coeff = lambda n: gegenbauer(n, p, x)  # noqa: E731
    elif which == "gegenbauer_modified":
        closed = (1 - t * t) / (1 - 2 * x * t + t * t) ** (p + 1)
        coeff = lambda n: (p + n) / p * gegenbauer(n, p, x)  # noqa: E731
    else:
        raise ValueError(f"unknown generating function {which!r}")
    partial = math.fsum(coeff(n) * t ** n for n in range(terms))
    return partial, closed
