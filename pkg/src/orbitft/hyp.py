"""Hypergeometric series and the 2F1 transformation calculus.

Series are summed term by term. Binary64 inputs go through a
double-double kernel so that terminating sums with heavy sign
alternation keep their digits; when the measured cancellation exceeds
what double-double can absorb, a terminating sum is redone exactly in
rationals. Any other numeric type (``mpmath.mpf``,
``fractions.Fraction``) is summed in its own arithmetic, which is how a
wider type is substituted for stability experiments.

Out-of-domain arguments are refused, never resummed: choosing an
analytic continuation is the caller's job.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from numbers import Integral

from . import _dd
from .errors import DomainError, SeriesConvergenceError

TERMINATION_TOL = 1e-9
MAX_TERMS = 10_000
TAIL_RTOL = 1e-16
# condition number above which terminating series are redone in rationals
EXACT_FALLBACK = 1e13


def nonpositive_integer(x, tol: float = TERMINATION_TOL) -> int | None:
    """Return ``k`` if ``x`` is within ``tol`` of ``-k`` (k >= 0), else None."""
    if isinstance(x, complex):
        if x.imag != 0:
            return None
        x = x.real
    xf = float(x)
    k = round(-xf)
    if k >= 0 and abs(xf + k) <= tol:
        return int(k)
    return None


def _is_binary64(values) -> bool:
    return all(isinstance(v, (float, Integral, complex)) and not isinstance(v, bool)
               for v in values)


def _stop_index(upper, lower) -> int | None:
    """Highest term index of a terminating series, or None."""
    stops = [k for k in (nonpositive_integer(a) for a in upper) if k is not None]
    K = min(stops) if stops else None
    for b in lower:
        m = nonpositive_integer(b)
        if m is None:
            continue
        if K is None or m < K:
            raise DomainError(
                f"denominator parameter {b} hits a pole before the series terminates")
    return K


def _tail_ratio_bound(upper, lower, k, z_abs, p_eq_q1: bool) -> float | None:
    """Bound on all future term ratios once past the parameter turning point."""
    if k <= max([abs(float(v)) for v in (*upper, *lower)] + [0.0]) + 2:
        return None
    num = 1.0
    for a in upper:
        num *= abs(float(a) + k)
    den = float(k + 1)
    for b in lower:
        den *= abs(float(b) + k)
    ratio = num / den * z_abs
    return max(ratio, z_abs) if p_eq_q1 else ratio


def _pfq_dd(upper, lower, z, K):
    """Double-double summation; ``z`` float or complex."""
    is_complex = isinstance(z, complex)
    if is_complex:
        zr, zi = z.real, z.imag
    else:
        zr = float(z)
    z_abs = abs(z)
    p_eq_q1 = len(upper) == len(lower) + 1
    one = (1.0, 0.0)
    tr, ti = one, (0.0, 0.0)
    sr, si = one, (0.0, 0.0)
    magnitude = 1.0
    k = 0
    while True:
        if K is not None and k >= K:
            break
        if K is None and k >= MAX_TERMS:
            raise SeriesConvergenceError(
                f"no convergence after {MAX_TERMS} terms (|z|={z_abs:.6g})")
        num = one
        for a in upper:
            num = _dd.mul(num, _dd.two_sum(float(a), float(k)))
        den = _dd.from_float(float(k + 1))
        for b in lower:
            den = _dd.mul(den, _dd.two_sum(float(b), float(k)))
        ratio = _dd.div(num, den)
        tr = _dd.mul(tr, ratio)
        if is_complex:
            ti = _dd.mul(ti, ratio)
            tr, ti = (_dd.add(_dd.mul_d(tr, zr), _dd.neg(_dd.mul_d(ti, zi))),
                      _dd.add(_dd.mul_d(tr, zi), _dd.mul_d(ti, zr)))
            si = _dd.add(si, ti)
        else:
            tr = _dd.mul_d(tr, zr)
        sr = _dd.add(sr, tr)
        magnitude += math.hypot(tr[0], ti[0])
        k += 1
        if K is None:
            rho = _tail_ratio_bound(upper, lower, k, z_abs, p_eq_q1)
            if rho is not None and rho < 1.0:
                t_abs = math.hypot(tr[0], ti[0])
                s_abs = math.hypot(sr[0], si[0])
                if t_abs * rho / (1.0 - rho) <= TAIL_RTOL * s_abs:
                    break
    if K is not None and magnitude > EXACT_FALLBACK * math.hypot(sr[0], si[0]):
        # cancellation beyond what double-double absorbs: sum the finite series exactly
        return _pfq_exact(upper, lower, z, K), k + 1
    if is_complex:
        return complex(_dd.to_float(sr), _dd.to_float(si)), k + 1
    return _dd.to_float(sr), k + 1


def _pfq_exact(upper, lower, z, K):
    """Rational summation of a terminating series with binary64 inputs."""
    up = [Fraction(float(a)) for a in upper]
    lo = [Fraction(float(b)) for b in lower]
    zc = complex(z)
    zr, zi = Fraction(zc.real), Fraction(zc.imag)
    tr, ti = Fraction(1), Fraction(0)
    sr, si = Fraction(1), Fraction(0)
    for k in range(K):
        ratio = Fraction(1, k + 1)
        for a in up:
            ratio *= a + k
        for b in lo:
            ratio /= b + k
        tr, ti = tr * ratio, ti * ratio
        tr, ti = tr * zr - ti * zi, tr * zi + ti * zr
        sr += tr
        si += ti
    if isinstance(z, complex):
        return complex(float(sr), float(si))
    return float(sr)


def _pfq_generic(upper, lower, z, K):
    """Summation in the arithmetic of the inputs (mpf, Fraction, ...)."""
    p_eq_q1 = len(upper) == len(lower) + 1
    z_abs = abs(complex(z)) if isinstance(z, complex) else abs(float(z))
    term = 1
    total = 1
    k = 0
    while True:
        if K is not None and k >= K:
            break
        if K is None and k >= MAX_TERMS:
            raise SeriesConvergenceError(f"no convergence after {MAX_TERMS} terms")
        num = 1
        for a in upper:
            num = num * (a + k)
        den = k + 1
        for b in lower:
            den = den * (b + k)
        term = term * num / den * z
        total = total + term
        k += 1
        if K is None:
            rho = _tail_ratio_bound(upper, lower, k, z_abs, p_eq_q1)
            if rho is not None and rho < 1.0:
                if abs(term) * rho / (1.0 - rho) <= TAIL_RTOL * abs(total):
                    break
    return total, k + 1


def pfq(upper, lower, z, *, with_count: bool = False):
    """Generalized hypergeometric series pFq(upper; lower; z).

    Terminating series (some upper parameter a nonpositive integer) are
    summed exactly up to their last term. Nonterminating ones are summed
    until a ratio bound guarantees the relative tail is below
    ``TAIL_RTOL``.
    """
    upper = tuple(upper)
    lower = tuple(lower)
    K = _stop_index(upper, lower)
    if z == 0:
        return (1.0, 1) if with_count else 1.0
    if _is_binary64((*upper, *lower, z)):
        if isinstance(z, complex) and z.imag == 0:
            z = z.real
        value, count = _pfq_dd(upper, lower, z, K)
    else:
        value, count = _pfq_generic(upper, lower, z, K)
    return (value, count) if with_count else value


def hyp1f1(a, b, z):
    """Confluent series 1F1(a; b; z).

    Nonterminating calls with negative ``z`` go through Kummer's relation
    so that the summed series has positive terms.
    """
    K = _stop_index((a,), (b,))
    if K is None:
        if abs(float(z)) > 50:
            raise DomainError("nonterminating 1F1 is supported for |z| <= 50 only")
        if float(z) < 0 and _is_binary64((a, b, z)):
            return math.exp(z) * pfq((b - a,), (b,), -z)
    return pfq((a,), (b,), z)


def hyp2f1_series(a, b, c, z, *, with_count: bool = False):
    """Bare 2F1(a, b; c; z) series; refuses |z| >= 1 unless terminating."""
    K = _stop_index((a, b), (c,))
    if K is None:
        z_abs = abs(complex(z)) if isinstance(z, complex) else abs(float(z))
        if z_abs >= 1.0:
            raise DomainError(
                f"nonterminating 2F1 with |z| = {z_abs:.6g} >= 1; "
                "use a representation whose series converges here")
    return pfq((a, b), (c,), z, with_count=with_count)


def hyp3f2(a1, a2, a3, b1, b2, z):
    """Terminating 3F2(a1, a2, a3; b1, b2; z)."""
    if z == 0:
        return 1.0
    if _stop_index((a1, a2, a3), (b1, b2)) is None:
        raise DomainError("only terminating 3F2 series are supported")
    return pfq((a1, a2, a3), (b1, b2), z)


@dataclass(frozen=True)
class Hyp2F1Term:
    """``prefactor * 2F1(a, b; c; argument)`` as a symbolic record."""

    a: float
    b: float
    c: float
    argument: complex
    prefactor: complex = 1.0 + 0.0j

    def __post_init__(self):
        k = nonpositive_integer(self.c)
        if k is not None:
            stop = _stop_index((self.a, self.b), ())
            if stop is None or k < stop:
                raise DomainError(f"c = {self.c} is a pole of the series")

    @property
    def terminating(self) -> bool:
        return (nonpositive_integer(self.a) is not None
                or nonpositive_integer(self.b) is not None)

    def value(self) -> complex:
        return hyp2f1(self)


def hyp2f1(term: Hyp2F1Term) -> complex:
    z = complex(term.argument)
    z = complex(z.real, z.imag + 0.0)
    arg = z.real if z.imag == 0 else z
    s = hyp2f1_series(term.a, term.b, term.c, arg)
    return complex(term.prefactor) * complex(s)


class TransformKind(enum.Enum):
    EULER = "euler"
    PFAFF_A = "pfaff_a"
    PFAFF_B = "pfaff_b"
    QT17 = "qt17"
    QT18_PLUS = "qt18_plus"
    QT18_MINUS = "qt18_minus"
    QT19 = "qt19"
    QT32 = "qt32"


def _clean(z: complex) -> complex:
    # drop negative zeros so principal branches are taken from above the cut
    return complex(z.real + 0.0, z.imag + 0.0)


def _cpow(base: complex, expo: float) -> complex:
    base = _clean(complex(base))
    if base == 0:
        if expo > 0:
            return 0j
        if expo == 0:
            return 1 + 0j
        raise DomainError("algebraic prefactor is singular at this argument")
    if base.imag == 0 and base.real < 0 and float(expo) != int(expo):
        raise DomainError("argument lies on the branch cut of the prefactor power")
    if float(expo) == int(expo):
        return base ** int(expo)
    return base ** expo


def _csqrt(z: complex, *, cut: bool) -> complex:
    z = _clean(complex(z))
    if cut and z.imag == 0 and z.real < 0:
        raise DomainError("argument lies on the branch cut of the square root")
    return cmath.sqrt(z)


def _close(x, y, tol=1e-12) -> bool:
    return abs(float(x) - float(y)) <= tol * max(1.0, abs(float(x)), abs(float(y)))


def transform_2f1(term: Hyp2F1Term, kind: TransformKind | str) -> Hyp2F1Term:
    """Apply one linear or quadratic transformation to ``term``.

    The returned record has the same numerical value wherever both series
    converge (or either terminates); the algebraic factor is absorbed
    into the prefactor. All roots and fractional powers use the principal
    branch.
    """
    kind = TransformKind(kind)
    a, b, c = term.a, term.b, term.c
    z = _clean(complex(term.argument))
    pref = complex(term.prefactor)

    if kind is TransformKind.EULER:
        factor = _cpow(1 - z, c - a - b)
        return Hyp2F1Term(c - a, c - b, c, z, pref * factor)
    if kind in (TransformKind.PFAFF_A, TransformKind.PFAFF_B):
        if z == 1:
            raise DomainError("Pfaff transformation is singular at z = 1")
        w = z / (z - 1)
        if kind is TransformKind.PFAFF_A:
            return Hyp2F1Term(a, c - b, c, w, pref * _cpow(1 - z, -a))
        return Hyp2F1Term(c - a, b, c, w, pref * _cpow(1 - z, -b))
    if kind in (TransformKind.QT17, TransformKind.QT18_PLUS,
                TransformKind.QT18_MINUS, TransformKind.QT19):
        if _close(a, b + 0.5):
            a, b = b, a
        if not _close(b, a + 0.5):
            raise DomainError(f"{kind.value} requires b = a + 1/2 (got a={a}, b={b})")
        if kind is TransformKind.QT17:
            root = _csqrt(1 - z, cut=True)
            if root == 0:
                raise DomainError("qt17 is singular at z = 1")
            return Hyp2F1Term(2 * a, 2 * c - 2 * a - 1, c, (root - 1) / (2 * root),
                              pref * _cpow(1 - z, -a))
        if kind is TransformKind.QT19:
            root = _csqrt(1 - z, cut=True)
            return Hyp2F1Term(2 * a, 2 * a - c + 1, c, (1 - root) / (1 + root),
                              pref * _cpow((1 + root) / 2, -2 * a))
        # both signs are valid for either root of z, so no cut is imposed
        root = _csqrt(z, cut=False)
        sign = 1 if kind is TransformKind.QT18_PLUS else -1
        base = 1 + sign * root
        if base == 0:
            raise DomainError("qt18 is singular at this argument")
        return Hyp2F1Term(2 * a, c - 0.5, 2 * c - 1, sign * 2 * root / base,
                          pref * _cpow(base, -2 * a))
    if kind is TransformKind.QT32:
        if not _close(c, 2 * b) and _close(c, 2 * a):
            a, b = b, a
        if not _close(c, 2 * b):
            raise DomainError(f"qt32 requires c = 2b (got b={b}, c={c})")
        if z == 2:
            raise DomainError("qt32 is singular at z = 2")
        return Hyp2F1Term(a / 2, (a + 1) / 2, b + 0.5, z * z / (2 - z) ** 2,
                          pref * _cpow(1 - z / 2, -a))
    raise DomainError(f"unknown transformation {kind}")


def with_prefactor(term: Hyp2F1Term, prefactor: complex) -> Hyp2F1Term:
    return replace(term, prefactor=prefactor)
