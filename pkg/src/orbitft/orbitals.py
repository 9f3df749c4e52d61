"""Position-space orbitals and their finite expansions.

Every family is written as ``core(r) * Y_l^m-solid(scale * r_vec)``, where
the solid harmonic carries the angular part and the factor ``r^l``. The
Laguerre-type families (Sturmian, hydrogen, Lambda, Guseinov) share the
shape ``N exp(-b r) L_{n-l-1}^{(a)}(2 b r) Y(2 b r_vec)`` and differ only
in the norm ``N`` and the Laguerre superscript ``a``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .specfun import (QuantumNumbers, as_vector, direction_harmonic, double_factorial,
                      laguerre, laguerre_bs, log_pochhammer, reduced_bessel,
                      solid_harmonic)


class Family(enum.Enum):
    SLATER = "slater"
    HYDROGEN = "hydrogen"
    STURMIAN = "sturmian"
    LAMBDA = "lambda"
    BFUNCTION = "bfunction"
    GUSEINOV = "guseinov"
    GUSEINOV_ORIGINAL = "guseinov_original"


LAGUERRE_FAMILIES = (Family.HYDROGEN, Family.STURMIAN, Family.LAMBDA, Family.GUSEINOV)


class Basis(enum.Enum):
    SLATER = "slater"
    BFUNCTION = "bfunction"


@dataclass(frozen=True)
class OrbitalModel:
    """One orbital: family, quantum numbers and exponent.

    ``exponent`` is alpha (Slater), Z (hydrogen), beta (Sturmian, Lambda,
    B function, Guseinov) or zeta (original Guseinov). ``k`` is the
    Guseinov weight power; ``alpha_fric`` the frictional quantum number
    of the original Guseinov definition.
    """

    family: Family
    qn: QuantumNumbers
    exponent: float
    k: float | None = None
    alpha_fric: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "qn", QuantumNumbers(*self.qn))
        self.qn.validate(bound=self.family is not Family.BFUNCTION)
        if not self.exponent > 0:
            raise DomainError("exponent must be positive")
        if self.family is Family.GUSEINOV:
            if self.k is None or not self.k > -3:
                raise DomainError("Guseinov functions need k > -3")
        if self.family is Family.GUSEINOV_ORIGINAL:
            a = self.alpha_fric
            if a is None or a != int(a) or a > 1:
                raise DomainError("alpha_fric must be an integer <= 1")
            if self.qn.n + self.qn.l + 1 - a < 0:
                raise DomainError("n + l + 1 - alpha_fric must be >= 0")

    @classmethod
    def make(cls, family, n, l, m, exponent, *, k=None, alpha_fric=None) -> "OrbitalModel":
        return cls(Family(family), QuantumNumbers(n, l, m), float(exponent), k, alpha_fric)

    @property
    def n(self) -> int:
        return self.qn.n

    @property
    def l(self) -> int:
        return self.qn.l

    @property
    def m(self) -> int:
        return self.qn.m

    @property
    def beta(self) -> float:
        """Exponential decay constant of the Laguerre-type families."""
        if self.family is Family.HYDROGEN:
            return self.exponent / self.qn.n
        return self.exponent


@dataclass(frozen=True)
class Expansion:
    """Finite expansion ``sum_nu coeff_nu * basis_nu``.

    Coefficients factor as ``scale * weight_nu`` with exact rational weights,
    which lets ``evaluate(..., exact=True)`` form the inner polynomial sum
    without rounding; the default path sums binary64 terms.
    """

    basis: Basis
    terms: tuple[tuple[float, OrbitalModel], ...]
    scale: float = 1.0
    weights: tuple[Fraction, ...] | None = None

    def term_values(self, r) -> list[complex]:
        return [c * evaluate(f, r) for c, f in self.terms]

    def evaluate(self, r, exact: bool = False) -> complex:
        if not exact:
            return sum(self.term_values(r))
        if self.weights is None:
            raise DomainError("expansion carries no exact weights")
        v = as_vector(r)
        head = self.terms[0][1]
        b, l, m = head.exponent, head.l, head.m
        z = b * v.norm
        zq = Fraction(z)
        total = Fraction(0)
        if self.basis is Basis.SLATER:
            for nu, w in enumerate(self.weights):
                total += w * zq ** nu
        else:
            # B_{nu+1,l} = e^{-z} poly_nu(z) / (2^{nu+1+l} (nu+1+l)!), poly exact
            for nu, (w, poly) in enumerate(zip(self.weights, _bessel_polys(zq, len(self.weights)))):
                total += w * poly / (2 ** (nu + 1 + l) * math.factorial(nu + 1 + l))
        return self.scale * float(total) * math.exp(-z) * solid_harmonic(l, m, v.scaled(b))


def _bessel_polys(z: Fraction, count: int) -> list[Fraction]:
    """Exact e^{z} k̂_{nu+1/2}(z) for nu < count via the upward recurrence."""
    out = [Fraction(1), 1 + z]
    for nu in range(1, count - 1):
        out.append((2 * nu + 1) * out[nu] + z * z * out[nu - 1])
    return out[:count]


# -- normalization ----------------------------------------------------------

def _log_norm(model: OrbitalModel) -> float:
    """log of the printed normalization factor of a Laguerre-type family."""
    n, l = model.n, model.l
    b = model.beta
    lf = math.lgamma
    if model.family in (Family.STURMIAN, Family.HYDROGEN):
        return 1.5 * math.log(2 * b) + 0.5 * (lf(n - l) - math.log(2 * n) - lf(n + l + 1))
    if model.family is Family.LAMBDA:
        return 1.5 * math.log(2 * b) + 0.5 * (lf(n - l) - lf(n + l + 2))
    if model.family is Family.GUSEINOV:
        k = model.k
        return 0.5 * ((k + 3) * math.log(2 * b) + lf(n - l) - lf(n + l + k + 2))
    raise DomainError(f"{model.family.value} is not a Laguerre-type family")


def laguerre_superscript(model: OrbitalModel) -> float:
    l = model.l
    if model.family in (Family.STURMIAN, Family.HYDROGEN):
        return 2 * l + 1
    if model.family is Family.LAMBDA:
        return 2 * l + 2
    if model.family is Family.GUSEINOV:
        return 2 * l + model.k + 2
    raise DomainError(f"{model.family.value} is not a Laguerre-type family")


def _guseinov_original_log_norm(model: OrbitalModel) -> float:
    n, l, a = model.n, model.l, model.alpha_fric
    zeta = model.exponent
    return 0.5 * (3 * math.log(2 * zeta) + math.lgamma(n - l)
                  - a * math.log(2 * n) - math.lgamma(n + l + 2 - a))


# -- evaluation -------------------------------------------------------------

def _core(model: OrbitalModel, r):
    """Radial factor multiplying the solid harmonic; numpy aware."""
    exp = np.exp if isinstance(r, np.ndarray) else math.exp
    fam = model.family
    n, l = model.n, model.l
    if fam is Family.SLATER:
        a = model.exponent
        return (a * r) ** (n - l - 1) * exp(-a * r)
    if fam is Family.BFUNCTION:
        b = model.exponent
        scale = math.exp(-(n + l) * math.log(2) - math.lgamma(n + l + 1))
        return scale * reduced_bessel(n - 1, b * r)
    if fam is Family.GUSEINOV_ORIGINAL:
        z = model.exponent
        a = model.alpha_fric
        sign = -1 if a % 2 else 1
        poly = laguerre_bs(n + l + 1 - a, 2 * l + 2 - a, 2 * z * r)
        return sign * math.exp(_guseinov_original_log_norm(model)) * exp(-z * r) * poly
    b = model.beta
    return (math.exp(_log_norm(model)) * exp(-b * r)
            * laguerre(n - l - 1, laguerre_superscript(model), 2 * b * r))


def harmonic_scale(model: OrbitalModel) -> float:
    """Scale s in the angular factor Y_l^m-solid(s * r_vec)."""
    fam = model.family
    if fam in (Family.SLATER, Family.BFUNCTION):
        return model.exponent
    if fam is Family.GUSEINOV_ORIGINAL:
        return 2 * model.exponent
    return 2 * model.beta


def radial(model: OrbitalModel, r):
    """R(r) such that the orbital equals R(|r|) Y_l^m(r̂); numpy aware."""
    s = harmonic_scale(model)
    return _core(model, r) * (s * r) ** model.l


def evaluate(model: OrbitalModel, r) -> complex:
    """Value of the orbital at the point ``r`` (Bohr)."""
    v = as_vector(r)
    s = harmonic_scale(model)
    return _core(model, v.norm) * solid_harmonic(model.l, model.m, v.scaled(s))


def guseinov_original(alpha_fric: int, qn, zeta: float, r) -> complex:
    """Guseinov's original function in the Bethe-Salpeter notation.

    The unspecified angular factor S_lm is taken to be the complex Y_l^m.
    """
    qn = QuantumNumbers(*qn)
    model = OrbitalModel(Family.GUSEINOV_ORIGINAL, qn, zeta, alpha_fric=alpha_fric)
    return evaluate(model, r)


# -- expansions -------------------------------------------------------------


def _weights(upper, lower, count: int, factor=1) -> tuple[Fraction, ...]:
    """Exact ``prod (u)_nu / prod (w)_nu * factor^nu / nu!`` for nu < count."""
    upper = [Fraction(u) for u in upper]
    lower = [Fraction(w) for w in lower]
    out = []
    t = Fraction(1)
    for nu in range(count):
        out.append(t)
        for u in upper:
            t *= u + nu
        for w in lower:
            t /= w + nu
        t = t * factor / (nu + 1)
    return tuple(out)


def _assemble(basis: Basis, model: OrbitalModel, scale: float, weights) -> Expansion:
    l, m = model.l, model.m
    if basis is Basis.SLATER:
        family, first = Family.SLATER, l + 1
    else:
        family, first = Family.BFUNCTION, 1
    terms = tuple((scale * float(w), OrbitalModel(family, QuantumNumbers(nu + first, l, m), model.beta))
                  for nu, w in enumerate(weights))
    return Expansion(basis, terms, scale, weights)


def expand_in_slater(model: OrbitalModel) -> Expansion:
    """Finite expansion in Slater-type functions chi_{nu+l+1, l}(beta, r).

    Expands the Laguerre polynomial into powers. Coefficients inherit the
    strictly alternating signs of (-n+l+1)_nu.
    """
    if model.family not in LAGUERRE_FAMILIES:
        raise DomainError(f"no Slater expansion for {model.family.value}")
    n, l = model.n, model.l
    a = laguerre_superscript(model)
    top = n - l - 1
    # N 2^l (a+1)_top / top!  times  (-top)_nu 2^nu / ((a+1)_nu nu!)
    s0, lp0 = log_pochhammer(a + 1, top)
    scale = s0 * math.exp(_log_norm(model) + l * math.log(2) + lp0 - math.lgamma(top + 1))
    weights = _weights([-top], [Fraction(a) + 1], top + 1, factor=2)
    return _assemble(Basis.SLATER, model, scale, weights)


def _bfun_prefactor_log(model: OrbitalModel) -> float:
    n, l = model.n, model.l
    b = model.beta
    fam = model.family
    if fam in (Family.STURMIAN, Family.HYDROGEN):
        return (1.5 * math.log(2 * b) + l * math.log(2) - math.log(double_factorial(2 * l + 1))
                + 0.5 * (math.log(2 * n) + math.lgamma(n + l + 1) - math.lgamma(n - l)))
    if fam is Family.LAMBDA:
        return (1.5 * math.log(2 * b) + l * math.log(2) + math.log(2 * n + 1)
                - math.log(double_factorial(2 * l + 3))
                + 0.5 * (math.lgamma(n + l + 2) - math.lgamma(n - l)))
    k = model.k
    return (0.5 * ((k + 3) * math.log(b) + math.lgamma(n + l + k + 2)
                   - (k + 1) * math.log(2) - math.lgamma(n - l))
            + math.log(2 * n + k + 1) + 0.5 * math.log(math.pi) + math.lgamma(l + 2)
            - math.lgamma(l + 2 + k / 2) - math.lgamma(l + (k + 5) / 2))


def _bfun_ratio_params(model: OrbitalModel):
    """Upper and lower Pochhammer parameters of the B-function coefficients."""
    n, l = model.n, model.l
    fam = model.family
    half = Fraction(1, 2)
    if fam in (Family.STURMIAN, Family.HYDROGEN):
        return (-n + l + 1, n + l + 1), (l + 3 * half,)
    if fam is Family.LAMBDA:
        return (-n + l + 1, n + l + 2), (l + 5 * half,)
    k = Fraction(model.k)
    return (-n + l + 1, n + l + k + 2, l + 2), (l + 2 + k / 2, l + (k + 5) / 2)


def expand_in_bfunctions(model: OrbitalModel) -> Expansion:
    """Finite expansion in B functions B_{nu+1, l}^m(beta, r), nu = 0..n-l-1."""
    if model.family not in LAGUERRE_FAMILIES:
        raise DomainError(f"no B-function expansion for {model.family.value}")
    upper, lower = _bfun_ratio_params(model)
    weights = _weights(upper, lower, model.n - model.l)
    return _assemble(Basis.BFUNCTION, model, math.exp(_bfun_prefactor_log(model)), weights)


def expand(model: OrbitalModel, basis: Basis | str) -> Expansion:
    basis = Basis(basis)
    if basis is Basis.SLATER:
        return expand_in_slater(model)
    return expand_in_bfunctions(model)


def angular_factor(model: OrbitalModel, direction) -> complex:
    """Y_l^m of a direction, convenience for callers assembling R(r) Y."""
    return direction_harmonic(model.l, model.m, direction)
