"""Double-double arithmetic on pairs of binary64 floats.

Error-free transformations after Dekker and Knuth. A value is carried as
``(hi, lo)`` with ``|lo| <= ulp(hi)/2``; roughly 32 significant digits.
Only the handful of operations the series kernels need are provided.
"""

from __future__ import annotations

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float) -> tuple[float, float]:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def add(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    s, e = two_sum(x[0], y[0])
    t, f = two_sum(x[1], y[1])
    e += t
    s, e = quick_two_sum(s, e)
    e += f
    return quick_two_sum(s, e)


def mul(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    p, e = two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    return quick_two_sum(p, e)


def mul_d(x: tuple[float, float], b: float) -> tuple[float, float]:
    p, e = two_prod(x[0], b)
    e += x[1] * b
    return quick_two_sum(p, e)


def div(x: tuple[float, float], y: tuple[float, float]) -> tuple[float, float]:
    q1 = x[0] / y[0]
    r = add(x, neg(mul_d(y, q1)))
    q2 = r[0] / y[0]
    r = add(r, neg(mul_d(y, q2)))
    q3 = r[0] / y[0]
    q = quick_two_sum(q1, q2)
    return add(q, (q3, 0.0))


def neg(x: tuple[float, float]) -> tuple[float, float]:
    return -x[0], -x[1]


def from_float(a: float) -> tuple[float, float]:
    return float(a), 0.0


def to_float(x: tuple[float, float]) -> float:
    return x[0] + x[1]
