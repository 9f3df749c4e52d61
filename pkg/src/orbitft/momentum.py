"""Closed-form momentum-space transforms.

Convention: the forward transform is (2 pi)^{-3/2} \\int e^{-i p.r} f(r) d^3r
in Hartree atomic units. Every closed form below is written as a real
radial factor times the solid harmonic Y_l^m(-i p) (or Y_l^m(-i p / 2)).

STF representations share the prefactor

    P = (n+l+1)! / ((2 pi)^{1/2} (1/2)_{l+1}) * Y_l^m(-i p / 2)

and differ in the algebraic factor and the 2F1 that follows.
"""

from __future__ import annotations

import enum
import math

from .errors import DomainError
from .hyp import Hyp2F1Term, TransformKind, hyp2f1, hyp3f2, transform_2f1
from .orbitals import Basis, Expansion, Family, OrbitalModel, expand
from .specfun import as_vector, double_factorial, gegenbauer, jacobi, log_pochhammer, solid_harmonic


class FtRepresentation(enum.Enum):
    STF_2F1_REAL = "stf_2f1_real"
    STF_2F1_COMPLEX_PLUS = "stf_2f1_complex_plus"
    STF_2F1_COMPLEX_MINUS = "stf_2f1_complex_minus"
    STF_EULER_REAL = "stf_euler_real"
    STF_EULER_COMPLEX_PLUS = "stf_euler_complex_plus"
    STF_EULER_COMPLEX_MINUS = "stf_euler_complex_minus"
    STF_SPLIT = "stf_split"
    STF_QT17 = "stf_qt17"
    STF_QT18_PLUS = "stf_qt18_plus"
    STF_QT18_MINUS = "stf_qt18_minus"
    STF_QT19 = "stf_qt19"
    STF_QT18_EULER_PLUS = "stf_qt18_euler_plus"
    STF_QT18_EULER_MINUS = "stf_qt18_euler_minus"
    STF_QT19_EULER = "stf_qt19_euler"
    STF_GEGENBAUER = "stf_gegenbauer"
    BFUN_CLOSED = "bfun_closed"
    HYD_GEGENBAUER = "hyd_gegenbauer"
    STURM_GEGENBAUER = "sturm_gegenbauer"
    STURM_2F1 = "sturm_2f1"
    STURM_UNNORMALIZED = "sturm_unnormalized"
    LAMBDA_2F1 = "lambda_2f1"
    LAMBDA_JACOBI = "lambda_jacobi"
    GUSEINOV_3F2 = "guseinov_3f2"

    @property
    def is_stf(self) -> bool:
        return self.value.startswith("stf_")

    @property
    def terminating(self) -> bool:
        return self not in NONTERMINATING


R = FtRepresentation

NONTERMINATING = frozenset({R.STF_2F1_REAL, R.STF_2F1_COMPLEX_PLUS, R.STF_2F1_COMPLEX_MINUS,
                            R.STF_QT18_PLUS, R.STF_QT18_MINUS, R.STF_QT19})

STF_REPRESENTATIONS = tuple(r for r in R if r.is_stf)
TERMINATING_STF = tuple(r for r in STF_REPRESENTATIONS if r.terminating)

FAMILY_REPRESENTATIONS = {
    Family.SLATER: STF_REPRESENTATIONS,
    Family.BFUNCTION: (R.BFUN_CLOSED,),
    Family.HYDROGEN: (R.HYD_GEGENBAUER, R.STURM_GEGENBAUER, R.STURM_2F1, R.STURM_UNNORMALIZED),
    Family.STURMIAN: (R.STURM_GEGENBAUER, R.STURM_2F1, R.STURM_UNNORMALIZED),
    Family.LAMBDA: (R.LAMBDA_2F1, R.LAMBDA_JACOBI),
    Family.GUSEINOV: (R.GUSEINOV_3F2,),
}

DEFAULT_REPRESENTATION = {
    Family.SLATER: R.STF_GEGENBAUER,
    Family.BFUNCTION: R.BFUN_CLOSED,
    Family.HYDROGEN: R.HYD_GEGENBAUER,
    Family.STURMIAN: R.STURM_GEGENBAUER,
    Family.LAMBDA: R.LAMBDA_JACOBI,
    Family.GUSEINOV: R.GUSEINOV_3F2,
}


def as_momentum(p):
    """Momentum vector; a bare number is taken along the z axis."""
    if isinstance(p, (int, float)):
        return as_vector((0.0, 0.0, float(p)))
    return as_vector(p)


def valid_representations(model: OrbitalModel, p) -> list[FtRepresentation]:
    """Representations usable for ``model`` at momentum ``p``."""
    reps = FAMILY_REPRESENTATIONS.get(model.family, ())
    if model.family is not Family.SLATER:
        return list(reps)
    pn = as_momentum(p).norm
    return [r for r in reps if _stf_domain_ok(r, model.exponent, pn)]


def default_representation(model: OrbitalModel) -> FtRepresentation:
    try:
        return DEFAULT_REPRESENTATION[model.family]
    except KeyError:
        raise DomainError(f"no closed-form transform for {model.family.value}") from None


# -- B functions and Hankel integrals ----------------------------------------

def ft_bfunction(n: int, l: int, m: int, beta: float, p) -> complex:
    """(2/pi)^{1/2} beta^{2n+l-1} / (beta^2+p^2)^{n+l+1} Y_l^m(-i p)."""
    if n < 1:
        raise DomainError("B functions need n >= 1")
    if not beta > 0:
        raise DomainError("beta must be positive")
    v = as_momentum(p)
    pn = v.norm
    # beta^{2n+l-1} / (beta^2+p^2)^{n+l+1} = w^{n+l+1} beta^{-l-3}; powers keep ulp accuracy
    w = beta * beta / (beta * beta + pn * pn)
    radial = math.sqrt(2 / math.pi) * w ** (n + l + 1) / beta ** (l + 3)
    return radial * solid_harmonic(l, m, v, imaginary_scale=True)


class HankelVariant(enum.Enum):
    REAL_2F1 = "real2F1"
    COMPLEX_2F1_PLUS = "complex2F1_plus"
    COMPLEX_2F1_MINUS = "complex2F1_minus"
    BESSEL_K = "besselK"


def hankel_exp_bessel(mu: float, nu: float, a: float, b: float, variant) -> complex:
    """Closed forms of two Hankel-type integrals.

    The 2F1 variants give \\int_0^inf e^{-a y} J_nu(b y) y^{mu-1} dy, the
    ``besselK`` variant gives \\int_0^inf K_mu(a t) J_nu(b t) t^{mu+nu+1} dt.
    """
    variant = HankelVariant(variant)
    if not a > 0 or b < 0:
        raise DomainError("need a > 0 and b >= 0")
    if variant is HankelVariant.BESSEL_K:
        if not mu + nu > abs(mu):
            raise DomainError("the K.J integral needs mu + nu > |mu|")
        s = mu + nu
        if b == 0:
            return 0j if nu > 0 else complex(math.gamma(s + 1) * 2 ** s * a ** mu / a ** (2 * s + 2))
        return complex(math.gamma(s + 1) * 2 ** s * a ** mu * b ** nu / (a * a + b * b) ** (s + 1))
    if not mu + nu > 0:
        raise DomainError("the e.J integral needs mu + nu > 0")
    s = mu + nu
    if b == 0:
        return 0j if nu > 0 else complex(math.gamma(mu) / a ** mu)
    head = (b / 2) ** nu * math.exp(math.lgamma(s) - math.lgamma(nu + 1))
    if variant is HankelVariant.REAL_2F1:
        term = Hyp2F1Term(s / 2, (s + 1) / 2, nu + 1, -(b * b) / (a * a), head / a ** s)
        if abs(term.argument) >= 0.5 and not term.terminating:
            term = transform_2f1(term, TransformKind.PFAFF_A)
        return hyp2f1(term)
    sign = 1 if variant is HankelVariant.COMPLEX_2F1_PLUS else -1
    w = complex(a, sign * b)
    term = Hyp2F1Term(nu + 0.5, s, 2 * nu + 1, sign * 2j * b / w, head / w ** s)
    return hyp2f1(term)


# -- Slater-type functions ---------------------------------------------------

def _stf_domain_ok(rep: FtRepresentation, alpha: float, p: float) -> bool:
    if rep is R.STF_2F1_REAL:
        return p < alpha
    if rep in (R.STF_2F1_COMPLEX_PLUS, R.STF_2F1_COMPLEX_MINUS, R.STF_QT18_PLUS, R.STF_QT18_MINUS):
        # |2 i p / (alpha +- i p)| < 1
        return 3 * p * p < alpha * alpha
    return True


def _stf_log_head(n: int, l: int) -> float:
    """log of (n+l+1)! / ((2 pi)^{1/2} (1/2)_{l+1})."""
    return math.lgamma(n + l + 2) - 0.5 * math.log(2 * math.pi) - log_pochhammer(0.5, l + 1)[1]


def _stf_term(n: int, l: int, alpha: float, p: float, rep: FtRepresentation) -> Hyp2F1Term:
    """Radial part of one STF representation as ``prefactor * 2F1``.

    The Y_l^m(-i p / 2) factor and the common head are left out.
    """
    a2p2 = alpha * alpha + p * p
    s = math.sqrt(a2p2)
    if rep is R.STF_2F1_REAL:
        return Hyp2F1Term((n + l + 2) / 2, (n + l + 3) / 2, l + 1.5, -(p * p) / (alpha * alpha),
                          alpha ** (-l - 3))
    if rep in (R.STF_2F1_COMPLEX_PLUS, R.STF_2F1_COMPLEX_MINUS):
        sign = 1 if rep is R.STF_2F1_COMPLEX_PLUS else -1
        w = complex(alpha, sign * p)
        return Hyp2F1Term(n + l + 2, l + 1, 2 * l + 2, sign * 2j * p / w,
                          math.exp((n - 1) * math.log(alpha)) / w ** (n + l + 2))
    if rep is R.STF_EULER_REAL:
        return Hyp2F1Term((l - n) / 2, (l - n + 1) / 2, l + 1.5, -(p * p) / (alpha * alpha),
                          math.exp((2 * n - l - 1) * math.log(alpha) - (n + 1) * math.log(a2p2)))
    if rep in (R.STF_EULER_COMPLEX_PLUS, R.STF_EULER_COMPLEX_MINUS,
               R.STF_QT18_EULER_PLUS, R.STF_QT18_EULER_MINUS):
        sign = 1 if rep in (R.STF_EULER_COMPLEX_PLUS, R.STF_QT18_EULER_PLUS) else -1
        w = complex(alpha, sign * p)
        return Hyp2F1Term(l - n, l + 1, 2 * l + 2, sign * 2j * p / w,
                          alpha ** (n - 1) / (w ** (l + 1) * w.conjugate() ** (n + 1)))
    if rep is R.STF_QT17:
        return Hyp2F1Term(n + l + 2, l - n, l + 1.5, (s - alpha) / (2 * s),
                          math.exp((n - 1) * math.log(alpha) - (n + l + 2) * math.log(s)))
    if rep in (R.STF_QT18_PLUS, R.STF_QT18_MINUS):
        kind = TransformKind.QT18_PLUS if rep is R.STF_QT18_PLUS else TransformKind.QT18_MINUS
        return transform_2f1(_stf_term(n, l, alpha, p, R.STF_2F1_REAL), kind)
    x = (alpha - s) / (alpha + s)
    if rep is R.STF_QT19:
        # the algebraic factor is 2^{n+l+2} alpha^{n-1} / (alpha + s)^{n+l+2}
        return Hyp2F1Term(n + l + 2, n + 1.5, l + 1.5, x,
                          math.exp((n + l + 2) * math.log(2) + (n - 1) * math.log(alpha)
                                   - (n + l + 2) * math.log(alpha + s)))
    if rep is R.STF_QT19_EULER:
        # Euler transform of the above: 2^{l-n} alpha^{n-1} (alpha+s)^{n-l} / s^{2n+2}
        return Hyp2F1Term(l - n, -n - 0.5, l + 1.5, x,
                          math.exp((l - n) * math.log(2) + (n - 1) * math.log(alpha)
                                   + (n - l) * math.log(alpha + s) - (2 * n + 2) * math.log(s)))
    raise DomainError(f"{rep.value} is not a 2F1-based STF representation")


def _stf_split_radial(n: int, l: int, alpha: float, p: float) -> float:
    """Two-branch z -> 1/(1-z) representation; only one branch survives.

    Expressed relative to the common head so that it can share assembly
    with the other routes.
    """
    a2p2 = alpha * alpha + p * p
    w = alpha * alpha / a2p2
    # (pi/2)^{1/2} / head' with head' = 1/((2 pi)^{1/2} (1/2)_{l+1})
    scale = math.pi * math.exp(log_pochhammer(0.5, l + 1)[1])
    if (n - l) % 2 == 0:
        g = 1.0 / (math.gamma((n + l + 3) / 2) * math.gamma((l - n + 1) / 2))
        f = hyp2f1(Hyp2F1Term((n + l + 2) / 2, (l - n) / 2, 0.5, w)).real
        return scale * g * math.exp((n - 1) * math.log(alpha) - (n + l + 2) / 2 * math.log(a2p2)) * f
    g = 1.0 / (math.gamma((n + l + 2) / 2) * math.gamma((l - n) / 2))
    f = hyp2f1(Hyp2F1Term((n + l + 3) / 2, (l - n + 1) / 2, 1.5, w)).real
    return -2 * scale * g * math.exp(n * math.log(alpha) - (n + l + 3) / 2 * math.log(a2p2)) * f


def _stf_gegenbauer_radial(n: int, l: int, alpha: float, p: float) -> float:
    """Gegenbauer form relative to the common head."""
    a2p2 = alpha * alpha + p * p
    s = math.sqrt(a2p2)
    logc = (math.lgamma(n - l + 1) - log_pochhammer(2 * l + 2, n - l)[1]
            + (n - 1) * math.log(alpha) - ((n + l) / 2 + 1) * math.log(a2p2))
    return math.exp(logc) * gegenbauer(n - l, l + 1, alpha / s)


def ft_slater(n: int, l: int, m: int, alpha: float, p, rep=R.STF_GEGENBAUER) -> complex:
    """Transform of chi_{n,l}^m(alpha) = (alpha r)^{n-l-1} e^{-alpha r} Y_l^m(alpha r)."""
    rep = FtRepresentation(rep)
    if not rep.is_stf:
        raise DomainError(f"{rep.value} is not a Slater-type representation")
    if n < l + 1 or abs(m) > l:
        raise DomainError("need n >= l+1 and |m| <= l")
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    v = as_momentum(p)
    pn = v.norm
    if not _stf_domain_ok(rep, alpha, pn):
        raise DomainError(f"{rep.value} is outside its convergence domain at p/alpha = {pn / alpha:.6g}")
    angular = solid_harmonic(l, m, v.scaled(0.5), imaginary_scale=True)
    if angular == 0:
        return 0j
    head = math.exp(_stf_log_head(n, l))
    if rep is R.STF_SPLIT:
        radial = _stf_split_radial(n, l, alpha, pn)
    elif rep is R.STF_GEGENBAUER:
        radial = _stf_gegenbauer_radial(n, l, alpha, pn)
    else:
        value = hyp2f1(_stf_term(n, l, alpha, pn, rep))
        # conjugate pairs and real-argument forms are real up to rounding
        radial = value.real
    return head * radial * angular


# -- per-family closed forms -------------------------------------------------

def _gegenbauer_argument(beta: float, p: float) -> float:
    return (p * p - beta * beta) / (p * p + beta * beta)


def _family_radial(model: OrbitalModel, p: float, rep: FtRepresentation) -> float:
    """Radial factor multiplying Y_l^m(-i p)."""
    n, l = model.n, model.l
    b = model.beta
    b2p2 = b * b + p * p
    w = b * b / b2p2
    lg = math.lgamma
    if rep in (R.HYD_GEGENBAUER, R.STURM_GEGENBAUER):
        # identical once beta = Z/n
        logc = (l * math.log(2) + lg(l + 1)
                + 0.5 * (math.log(2 * b * n) + lg(n - l) - math.log(math.pi) - lg(n + l + 1))
                + (l + 2) * math.log(2 * b / b2p2))
        return math.exp(logc) * gegenbauer(n - l - 1, l + 1, _gegenbauer_argument(b, p))
    if rep is R.STURM_UNNORMALIZED:
        logc = (0.5 * math.log(2 / math.pi) + (2 * l + 1) * math.log(2) + lg(l + 1)
                + (l + 1) * math.log(b) + math.log(n) - (l + 2) * math.log(b2p2))
        norm = 1.5 * math.log(2 * b) + 0.5 * (lg(n - l) - math.log(2 * n) - lg(n + l + 1))
        return math.exp(logc + norm) * gegenbauer(n - l - 1, l + 1, _gegenbauer_argument(b, p))
    if rep is R.STURM_2F1:
        logc = (-math.log(double_factorial(2 * l + 1))
                + 0.5 * (math.log(b / math.pi) + math.log(2 * n) + lg(n + l + 1) - lg(n - l))
                + (l + 2) * math.log(2 * b / b2p2))
        return math.exp(logc) * hyp2f1(Hyp2F1Term(-n + l + 1, n + l + 1, l + 1.5, w)).real
    if rep is R.LAMBDA_2F1:
        logc = (math.log(2 * n + 1) - math.log(double_factorial(2 * l + 3))
                + 0.5 * (math.log(b / math.pi) + lg(n + l + 2) - lg(n - l))
                + (l + 2) * math.log(2 * b / b2p2))
        return math.exp(logc) * hyp2f1(Hyp2F1Term(-n + l + 1, n + l + 2, l + 2.5, w)).real
    if rep is R.LAMBDA_JACOBI:
        logc = (math.log(2) - log_pochhammer(0.5, n)[1]
                + 0.5 * (math.log(b) + lg(n + l + 2) + lg(n - l) - math.log(math.pi))
                + (l + 2) * math.log(b / b2p2))
        return math.exp(logc) * jacobi(n - l - 1, l + 1.5, l + 0.5, _gegenbauer_argument(b, p))
    if rep is R.GUSEINOV_3F2:
        k = model.k
        logc = (0.5 * ((k + 1) * math.log(b) + lg(n + l + k + 2) - math.log(math.pi)
                       - k * math.log(2) - lg(n - l))
                + math.log(2 * n + k + 1) + 0.5 * math.log(math.pi) + lg(l + 2)
                - (l + 2) * math.log(2) - lg(l + 2 + k / 2) - lg(l + (k + 5) / 2)
                + (l + 2) * math.log(2 * b / b2p2))
        # second upper parameter n+l+k+2, as composed from the B-function expansion
        return math.exp(logc) * hyp3f2(-n + l + 1, n + l + k + 2, l + 2, l + 2 + k / 2, l + (k + 5) / 2, w)
    raise DomainError(f"{rep.value} is not a family representation")


def ft_closed_form(model: OrbitalModel, p, rep=None) -> complex:
    """Closed-form transform of ``model``; ``rep`` defaults per family."""
    rep = default_representation(model) if rep is None else FtRepresentation(rep)
    if rep not in FAMILY_REPRESENTATIONS.get(model.family, ()):
        raise DomainError(f"{rep.value} does not apply to {model.family.value}")
    if model.family is Family.SLATER:
        return ft_slater(model.n, model.l, model.m, model.exponent, p, rep)
    if model.family is Family.BFUNCTION:
        return ft_bfunction(model.n, model.l, model.m, model.exponent, p)
    v = as_momentum(p)
    angular = solid_harmonic(model.l, model.m, v, imaginary_scale=True)
    if angular == 0:
        return 0j
    return _family_radial(model, v.norm, rep) * angular


# -- linearity route ---------------------------------------------------------

def expansion_ft_terms(expansion: Expansion, p, slater_rep=R.STF_GEGENBAUER) -> list[complex]:
    """Transforms of the individual weighted expansion terms."""
    out = []
    for coeff, f in expansion.terms:
        if expansion.basis is Basis.SLATER:
            ft = ft_slater(f.n, f.l, f.m, f.exponent, p, slater_rep)
        else:
            ft = ft_bfunction(f.n, f.l, f.m, f.exponent, p)
        out.append(coeff * ft)
    return out


def ft_via_expansion(model: OrbitalModel, basis, p, slater_rep=R.STF_GEGENBAUER) -> complex:
    """Transform by linearity: sum of coefficient times basis transform.

    The sum is plain binary64 on purpose; its loss of accuracy with n is
    what the stability scan measures.
    """
    terms = expansion_ft_terms(expand(model, Basis(basis)), p, slater_rep)
    total = 0j
    for t in terms:
        total += t
    return total
