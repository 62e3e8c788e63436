"""SO(n) 6j symbols for symmetric representations, exactly.

The symbol factors as a rational core coefficient times a square root assembled from
four triangular normalization factors.  The core coefficient has several equivalent
expansions implemented here:

* three production double sums over Pochhammer symbols in the half-sum array
  parameters (methods ``A``, ``B``, ``C``),
* three factorial-form double sums written directly in the labels, kept as an
  independent test path (methods ``AFactorial``, ``BFactorial``, ``CFactorial``),
* a triple sum (method ``T3``),
* closed forms for stretched (e = a + b) and near-stretched (e = a + b - 2)
  label sets (methods ``StretchedE``, ``NearStretchedE``).

``select_method`` scans the 144-element symmetry orbit for the cheapest evaluation;
``sixj`` ties everything together with a small LRU cache on canonical orbit
representatives.
"""
from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .exact import (
    FactoredProduct,
    GammaExact,
    PoleError,
    ResidualSqrtPiError,
    SurdValue,
    binomial,
    factorial,
    gamma_exact,
    gamma_ratio_product,
    is_nonpositive_integer,
)
from .labels import (
    RArray,
    SixJLabels,
    admissible,
    canonical_representative,
    shelepin,
    symmetry_orbit,
    triangle_ok,
)

METHODS = ("StretchedE", "NearStretchedE", "A", "B", "C", "T3")
FACTORIAL_METHODS = ("AFactorial", "BFactorial", "CFactorial")
_METHOD_RANK = {m: i for i, m in enumerate(METHODS)}


def _check_n(n: int, allow_n3: bool) -> None:
    if n >= 4:
        return
    if n == 3 and allow_n3:
        return
    raise ValueError(f"n = {n} unsupported (n >= 4, or n = 3 with allow_n3=True)")


# ---------------------------------------------------------------------------
# dimensions and the scalar 3j symbol
# ---------------------------------------------------------------------------

def dim(n: int, l: int) -> int:
    """Dimension of the symmetric representation with label l >= 0."""
    if l < 0:
        raise ValueError(f"negative label {l}")
    return (2 * l + n - 2) * factorial(l + n - 3) // (factorial(l) * factorial(n - 2))


def dim_formal(n: int, l: int) -> Fraction:
    """Dimension polynomial continued to arbitrary integer l (may be negative)."""
    ratio = gamma_ratio_product([l + n - 2], [l + 1])
    return ratio.to_rational() * Fraction(2 * l + n - 2, factorial(n - 2))


@lru_cache(maxsize=None)
def _gamma(x: Fraction) -> GammaExact:
    return gamma_exact(x)


def threej_zero(n: int, l1: int, l2: int, l3: int, allow_n3: bool = False) -> SurdValue:
    """The scalar 3j symbol of three symmetric representations; 0 unless triangular."""
    _check_n(n, allow_n3)
    if min(l1, l2, l3) < 0 or not triangle_ok(l1, l2, l3):
        return SurdValue.zero()
    half = Fraction(n, 2)
    j = (l1 + l2 + l3) // 2
    fp = FactoredProduct()
    fp.mul_factorial(j + n - 3)
    fp.mul_factorial(n - 3, -1)
    fp.mul_gamma(j + half, -1)
    for l in (l1, l2, l3):
        fp.mul_fraction(Fraction(2 * l + n - 2, 2))
        fp.mul_gamma(j - l + half - 1)
        fp.mul_int(dim(n, l), -1)
        fp.mul_factorial(j - l, -1)
    fp.mul_gamma(half, -2)
    return fp.sqrt_surd()


# ---------------------------------------------------------------------------
# triangular normalization factors
# ---------------------------------------------------------------------------

def nabla_coupled_sq_fp(n: int, a: int, b: int, e: int, inverted: bool = False) -> FactoredProduct:
    """Squared triangular factor as a factored product; inverted flips the first pair."""
    if not triangle_ok(a, b, e):
        raise ValueError(f"triad ({a}, {b}, {e}) violates the triangle condition")
    half = Fraction(n, 2)
    fp = FactoredProduct()
    sgn = -1 if inverted else 1
    fp.mul_factorial((b + e - a) // 2, sgn)
    fp.mul_factorial((a - b + e) // 2, sgn)
    fp.mul_gamma(Fraction(b + e - a, 2) + half - 1, -sgn)
    fp.mul_gamma(Fraction(a - b + e, 2) + half - 1, -sgn)
    fp.mul_factorial((a + b - e) // 2)
    fp.mul_gamma(Fraction(a + b + e, 2) + half)
    fp.mul_gamma(Fraction(a + b - e, 2) + half - 1, -1)
    fp.mul_factorial((a + b + e) // 2 + n - 3, -1)
    return fp


def nabla_coupled_sq(n: int, a: int, b: int, e: int) -> GammaExact:
    """Square of the coupled-basis triangular factor, exact for every n."""
    return nabla_coupled_sq_fp(n, a, b, e).to_gamma_exact()


def nabla_stretched_sq(n: int, a: int, b: int, e: int) -> GammaExact:
    """Square of the stretched-basis triangular factor (first quotient pair inverted)."""
    return nabla_coupled_sq_fp(n, a, b, e, inverted=True).to_gamma_exact()


def nabla_tilde_0123(n: int, a: int, b: int, e: int) -> SurdValue:
    """Coupled-basis triangular factor; rational-surd valued only for even n."""
    if n % 2:
        raise ResidualSqrtPiError("odd n leaves pi**(-1/2); use nabla_coupled_sq")
    return nabla_coupled_sq_fp(n, a, b, e).sqrt_surd()


def nabla_tilde_0356(n: int, a: int, b: int, e: int) -> SurdValue:
    """Stretched-basis triangular factor; rational-surd valued only for even n."""
    if n % 2:
        raise ResidualSqrtPiError("odd n leaves pi**(-1/2); use nabla_stretched_sq")
    return nabla_coupled_sq_fp(n, a, b, e, inverted=True).sqrt_surd()


# ---------------------------------------------------------------------------
# the rational core coefficient
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CAlpha:
    """Core coefficient value with the labels and method that produced it."""

    value: Fraction
    labels: SixJLabels
    method: str
    terms: int = 0


def _abcdef(labels: SixJLabels) -> Fraction:
    n = labels.n
    prod = 1
    for x in labels.six:
        prod *= 2 * x + n - 2
    return Fraction(prod, 64)


def _poch_row(a: Fraction, kmax: int) -> list[Fraction]:
    """[(a)_0, (a)_1, ..., (a)_kmax]."""
    out = [Fraction(1)]
    v = Fraction(1)
    for i in range(kmax):
        v *= a + i
        out.append(v)
    return out


def _sum_pochhammer_a(arr: RArray, tau: Fraction) -> tuple[Fraction, int]:
    r = arr.r
    a2, a4 = arr.alpha[1], arr.alpha[3]
    b1, b2 = arr.beta[0], arr.beta[1]
    m1, m2 = r(1, 1), r(1, 3)
    up1 = [_poch_row(Fraction(-r(1, 4)), m1),
           _poch_row(Fraction(r(2, 2) + 1), m1),
           _poch_row(r(2, 3) + tau, m1)]
    down1 = [_poch_row(Fraction(-r(2, 1)), m1),
             _poch_row(-a4 - tau, m1),
             _poch_row(r(3, 4) + tau, m1)]
    up2 = [_poch_row(r(2, 4) + tau, m2),
           _poch_row(-r(1, 2) - tau + 1, m2)]
    down2 = [_poch_row(-a2 - tau, m2),
             _poch_row(r(3, 2) + tau, m2)]
    total = Fraction(0)
    nonzero = 0
    for x2 in range(m2 + 1):
        f2 = binomial(m2, x2) * up2[0][x2] * up2[1][x2] * down2[0][m2 - x2] * down2[1][m2 - x2]
        if f2 == 0:
            continue
        if x2 % 2:
            f2 = -f2
        coup_a = _poch_row(Fraction(b2 - b1 + x2 + 1), m1)
        coup_b = _poch_row(-r(2, 1) - tau - x2 + 1, m1)
        for x1 in range(m1 + 1):
            t = (binomial(m1, x1)
                 * up1[0][x1] * up1[1][x1] * up1[2][x1]
                 * down1[0][m1 - x1] * down1[1][m1 - x1] * down1[2][m1 - x1]
                 * coup_a[x1] * coup_b[m1 - x1])
            if t == 0:
                continue
            nonzero += 1
            total += -f2 * t if x1 % 2 else f2 * t
    return total, nonzero


def _sum_pochhammer_b(arr: RArray, tau: Fraction, n: int) -> tuple[Fraction, int]:
    r = arr.r
    a1, a2, a3, a4 = arr.alpha
    m1, m2 = r(1, 1), r(3, 1)
    up1 = [_poch_row(Fraction(-r(1, 4)), m1),
           _poch_row(Fraction(r(2, 2) + 1), m1),
           _poch_row(r(2, 3) + tau, m1)]
    down1 = [_poch_row(Fraction(-r(2, 1)), m1),
             _poch_row(r(3, 4) + tau, m1),
             _poch_row(-a4 - tau, m1)]
    up2 = [_poch_row(-a2 - tau, m2),
           _poch_row(Fraction(-a3 - n + 3), m2)]
    down2 = [_poch_row(r(2, 4) + tau, m2),
             _poch_row(Fraction(a1 + n - 2), m2)]
    total = Fraction(0)
    nonzero = 0
    for x2 in range(m2 + 1):
        f2 = binomial(m2, x2) * up2[0][x2] * up2[1][x2] * down2[0][m2 - x2] * down2[1][m2 - x2]
        if f2 == 0:
            continue
        if x2 % 2:
            f2 = -f2
        coup_a = _poch_row(Fraction(r(3, 4) - x2 + 1), m1)
        coup_b = _poch_row(-r(3, 4) - m1 - tau + x2 + 1, m1)
        for x1 in range(m1 + 1):
            t = (binomial(m1, x1)
                 * up1[0][x1] * up1[1][x1] * up1[2][x1]
                 * down1[0][m1 - x1] * down1[1][m1 - x1] * down1[2][m1 - x1]
                 * coup_a[m1 - x1] * coup_b[x1])
            if t == 0:
                continue
            nonzero += 1
            total += -f2 * t if x1 % 2 else f2 * t
    return total, nonzero


def _sum_pochhammer_c(arr: RArray, tau: Fraction, n: int) -> tuple[Fraction, int]:
    r = arr.r
    a1, a2, a3, a4 = arr.alpha
    m1, m2 = r(1, 1), r(3, 1)
    up1 = [_poch_row(Fraction(-r(1, 2)), m1),
           _poch_row(-a3 - tau, m1),
           _poch_row(-a4 - tau, m1)]
    down1 = [_poch_row(r(3, 2) + tau, m1),
             _poch_row(Fraction(r(2, 2) + 1), m1),
             _poch_row(Fraction(a1 + n - 2), m1)]
    up2 = [_poch_row(r(2, 3) + tau, m2),
           _poch_row(r(2, 4) + tau, m2)]
    down2 = [_poch_row(-a2 - tau, m2),
             _poch_row(-r(2, 1) - tau + 1, m2)]
    total = Fraction(0)
    nonzero = 0
    for x2 in range(m2 + 1):
        f2 = binomial(m2, x2) * up2[0][x2] * up2[1][x2] * down2[0][m2 - x2] * down2[1][m2 - x2]
        if f2 == 0:
            continue
        if x2 % 2:
            f2 = -f2
        coup_a = _poch_row(-r(3, 2) - m1 - tau + x2 + 1, m1)
        coup_b = _poch_row(Fraction(r(3, 2) - x2 + 1), m1)
        for x1 in range(m1 + 1):
            t = (binomial(m1, x1)
                 * up1[0][x1] * up1[1][x1] * up1[2][x1]
                 * down1[0][m1 - x1] * down1[1][m1 - x1] * down1[2][m1 - x1]
                 * coup_a[x1] * coup_b[m1 - x1])
            if t == 0:
                continue
            nonzero += 1
            total += -f2 * t if x1 % 2 else f2 * t
    return total, nonzero


def _c_pochhammer(labels: SixJLabels, variant: str) -> tuple[Fraction, int]:
    n = labels.n
    tau = Fraction(n, 2) - 1
    arr = shelepin(labels)
    r = arr.r
    a1, a2, a3, a4 = arr.alpha
    b1, b3 = arr.beta[0], arr.beta[2]
    half = Fraction(n, 2)
    gamma_dens = [a2 + tau + 1, a3 + tau + 1, a4 + tau + 1, half, half, half]
    if variant == "A":
        phase = -1 if (a1 - a3) % 2 else 1
        lead = Fraction(factorial(a3 + n - 3))
        fact_dens = (r(1, 1), r(1, 2), r(1, 3), r(1, 4), r(2, 1), r(3, 3))
        gamma_nums = [r(2, 2) + tau, r(2, 3) + tau, r(2, 4) + tau,
                      r(3, 2) + tau, r(3, 3) + tau, r(3, 4) + tau]
        total, terms = _sum_pochhammer_a(arr, tau)
    elif variant == "B":
        phase = -1 if (b1 - b3) % 2 else 1
        lead = Fraction(factorial(a1 + n - 3))
        fact_dens = (r(1, 1), r(1, 2), r(1, 4), r(2, 1), r(3, 1), r(3, 3))
        gamma_nums = [r(1, 2) + tau, r(2, 2) + tau, r(2, 3) + tau,
                      r(2, 4) + tau, r(3, 3) + tau, r(3, 4) + tau]
        total, terms = _sum_pochhammer_b(arr, tau, n)
    elif variant == "C":
        phase = -1 if (b1 - b3) % 2 else 1
        lead = Fraction(factorial(a1 + n - 3))
        fact_dens = (r(1, 1), r(1, 2), r(2, 1), r(3, 1), r(3, 3), r(3, 4))
        gamma_nums = [r(2, 2) + tau, r(2, 3) + tau, r(2, 4) + tau,
                      r(3, 2) + tau, r(3, 3) + tau, r(3, 4) + tau]
        total, terms = _sum_pochhammer_c(arr, tau, n)
    else:
        raise ValueError(f"unknown Pochhammer-form variant {variant}")
    if total == 0:
        return Fraction(0), terms
    for m in fact_dens:
        lead /= factorial(m)
    lead /= factorial(n - 3)
    gblock = gamma_ratio_product(gamma_nums, gamma_dens)
    value = (gblock * (phase * lead * total)).to_rational()
    return value * _abcdef(labels), terms


# ---------------------------------------------------------------------------
# factorial-form double sums (independent test path, written in the labels)
# ---------------------------------------------------------------------------

def _acc(total: GammaExact, g: GammaExact, sgn: int) -> GammaExact:
    """Accumulate series terms, which must share one sqrt(pi) exponent."""
    if total.is_zero():
        return GammaExact(sgn * g.coeff, g.sqrtpi_exp)
    if total.sqrtpi_exp != g.sqrtpi_exp:
        raise ResidualSqrtPiError("inconsistent sqrt(pi) exponent across series terms")
    return GammaExact(total.coeff + sgn * g.coeff, total.sqrtpi_exp)


def _term_gamma_product(nums, dens) -> GammaExact | None:
    """Product of gammas; None when a denominator pole makes the term zero."""
    for x in dens:
        if is_nonpositive_integer(x):
            return None
    out = GammaExact(Fraction(1))
    for x in nums:
        if is_nonpositive_integer(x):
            raise PoleError(f"numerator gamma pole at {x}")
        out = out * _gamma(Fraction(x))
    for x in dens:
        out = out / _gamma(Fraction(x))
    return out


def _c_factorial_ab(labels: SixJLabels, variant: str) -> tuple[Fraction, int]:
    a, b, e, d, c, f = labels.six
    n = labels.n
    half = Fraction(n, 2)
    pre_nums = [Fraction((a + c + f) // 2 + n - 2),
                Fraction(a + c - f, 2) + half - 1,
                Fraction(b + e - a, 2) + half - 1,
                Fraction(a - b + e, 2) + half - 1]
    pre_dens = [Fraction(a + c + f, 2) + half,
                Fraction((a + c - f) // 2 + 1), half, half, half,
                Fraction((b + e - a) // 2 + 1), Fraction((a - b + e) // 2 + 1)]
    sgn_exp = (b + c - e - f) // 2 if variant == "a" else (a - b - c + d) // 2
    z1_lo = max(0, (e + f - b - c) // 2)
    z1_hi = min((a - c + f) // 2, (d + f - b) // 2)
    if variant == "a":
        z2_lo, z2_hi = max(0, (b + c - e - f) // 2), (b + d - f) // 2
    else:
        z2_lo, z2_hi = 0, min((b - d + f) // 2, (c + f - a) // 2)
    total = GammaExact(Fraction(0))
    terms = 0
    for z1 in range(z1_lo, z1_hi + 1):
        for z2 in range(z2_lo, z2_hi + 1):
            if variant == "a":
                nums = [Fraction(b + d - f, 2) + half - 1 + z1,
                        Fraction((a + c - f) // 2 + 1 + z1),
                        f + half - 1 - z1,
                        Fraction(b + c + e - f, 2) + half - 1 - z2,
                        Fraction(d + f - b, 2) + half - 1 + z2,
                        Fraction(a - c + f, 2) + half - 1 + z2,
                        Fraction(z1 + z2 + 1)]
                dens = [Fraction(z1 + 1),
                        Fraction((a - c + f) // 2 - z1 + 1),
                        Fraction((d + f - b) // 2 - z1 + 1),
                        Fraction((b + c - e - f) // 2 + z1 + 1),
                        Fraction(b + c + e - f, 2) + half + z1,
                        Fraction(z2 + 1),
                        Fraction((b + d - f) // 2 - z2 + 1),
                        Fraction(a + c - f, 2) + half - 1 - z2,
                        Fraction((e + f - b - c) // 2 + z2 + 1),
                        f + half + z2,
                        half - 1 + z1 + z2]
            else:
                nums = [Fraction(b + d - f, 2) + half - 1 + z1,
                        Fraction((a + c - f) // 2 + 1 + z1),
                        f + half - 1 - z1,
                        Fraction(f - z1 - z2 + 1),
                        Fraction(b + c - e + f, 2) + half - 1 - z2,
                        f + half - 1 - z2,
                        Fraction((b + c + e + f) // 2 + n - 2 - z2)]
                dens = [Fraction(z1 + 1), Fraction(z2 + 1),
                        Fraction((a - c + f) // 2 - z1 + 1),
                        Fraction((b + c - e - f) // 2 + z1 + 1),
                        Fraction((d + f - b) // 2 - z1 + 1),
                        Fraction(b + c + e - f, 2) + half + z1,
                        f + half - 1 - z1 - z2,
                        Fraction((b - d + f) // 2 - z2 + 1),
                        Fraction((c + f - a) // 2 - z2 + 1),
                        Fraction(b + d + f, 2) + half - z2,
                        Fraction((a + c + f) // 2 + n - 2 - z2)]
            g = _term_gamma_product(nums, dens)
            if g is None or g.is_zero():
                continue
            terms += 1
            total = _acc(total, g, -1 if (z1 + z2) % 2 else 1)
    if total.is_zero():
        return Fraction(0), terms
    value = (gamma_ratio_product(pre_nums, pre_dens) * total) / factorial(n - 3)
    if sgn_exp % 2:
        value = -value
    return value.to_rational() * _abcdef(labels), terms


def _c_factorial_c(labels: SixJLabels) -> tuple[Fraction, int]:
    a, b, e, d, c, f = labels.six
    n = labels.n
    half = Fraction(n, 2)
    pre_nums = [Fraction(c + f - a, 2) + half - 1,
                Fraction(a - c + f, 2) + half - 1,
                Fraction(b + e - a, 2) + half - 1,
                Fraction(a - b + e, 2) + half - 1]
    pre_dens = [Fraction((c + f - a) // 2 + 1), Fraction((a - c + f) // 2 + 1),
                half, half, half,
                Fraction((b + e - a) // 2 + 1), Fraction((a - b + e) // 2 + 1)]
    sgn_exp = (a + d - e - f) // 2
    total = GammaExact(Fraction(0))
    terms = 0
    for z1 in range(min((a + b - e) // 2, (a + c - f) // 2) + 1):
        for z2 in range(min((b - d + f) // 2, (c - d + e) // 2) + 1):
            nums = [Fraction(a + b + c - d, 2) + half - 1 - z1,
                    Fraction(a - z1 + 1),
                    Fraction((a + b + c + d) // 2 + n - 2 - z1),
                    Fraction(d + f - b, 2) + half - 1 + z2,
                    Fraction(d + e - c, 2) + half - 1 + z2,
                    Fraction(a + b + c - d, 2) + half - 1 - z2,
                    Fraction((a + b + c - d) // 2 - z1 - z2 + 1)]
            dens = [Fraction(z1 + 1), Fraction(z2 + 1),
                    Fraction((a + b - e) // 2 - z1 + 1),
                    Fraction(a + b + e, 2) + half - z1,
                    Fraction((a + c - f) // 2 - z1 + 1),
                    Fraction(a + c + f, 2) + half - z1,
                    Fraction((b - d + f) // 2 - z2 + 1),
                    Fraction((c - d + e) // 2 - z2 + 1),
                    Fraction(a - b - c + d, 2) + half - 1 + z2,
                    d + half + z2,
                    Fraction(a + b + c - d, 2) + half - 1 - z1 - z2]
            g = _term_gamma_product(nums, dens)
            if g is None or g.is_zero():
                continue
            terms += 1
            total = _acc(total, g, -1 if (z1 + z2) % 2 else 1)
    if total.is_zero():
        return Fraction(0), terms
    value = (gamma_ratio_product(pre_nums, pre_dens) * total) / factorial(n - 3)
    if sgn_exp % 2:
        value = -value
    return value.to_rational() * _abcdef(labels), terms


# ---------------------------------------------------------------------------
# triple sum
# ---------------------------------------------------------------------------

def _c_triple(labels: SixJLabels) -> tuple[Fraction, int]:
    a, b, e, d, c, f = labels.six
    n = labels.n
    half = Fraction(n, 2)
    r11 = (a + b - e) // 2
    r13 = (b + d - f) // 2
    r14 = (c + d - e) // 2
    r21 = (a - c + f) // 2
    pre_nums = [Fraction((a + b + e) // 2 + n - 2),
                Fraction(a + b - e, 2) + half - 1,
                Fraction(b + e - a, 2) + half - 1,
                Fraction(a - b + e, 2) + half - 1,
                Fraction(d - b + f, 2) + half - 1]
    pre_dens = [Fraction(a + c + f, 2) + half,
                Fraction((a + c - f) // 2 + 1), half, half, half,
                Fraction((b + e - a) // 2 + 1), Fraction((a - b + e) // 2 + 1),
                Fraction((b - d + f) // 2 + 1)]
    total = GammaExact(Fraction(0))
    terms = 0
    for z3 in range(r11 + 1):
        for z1 in range(max(0, r11 - r14), min(r21, r11 - z3) + 1):
            for z2 in range(min(r13, r11 - z3) + 1):
                nums = [Fraction(a - z1 + 1),
                        Fraction(c + f - a, 2) + half - 1 + z1,
                        Fraction(b - z2 + 1),
                        Fraction((a + b - e) // 2 - z3 + 1),
                        a + b + Fraction(d - c - e, 2) + half - 1 - z1 - z2 - z3,
                        Fraction((a + b + c + d) // 2 + n - 2 - z2),
                        Fraction(c - d + e, 2) + half - 1 + z3]
                dens = [Fraction(z1 + 1), Fraction(z2 + 1), Fraction(z3 + 1),
                        Fraction((c + d - a - b) // 2 + z1 + 1),
                        Fraction((a - c + f) // 2 - z1 + 1),
                        Fraction((b + d - f) // 2 - z2 + 1),
                        Fraction(a + b + n - 2 - z1 - z2),
                        Fraction((a + b - e) // 2 - z1 - z3 + 1),
                        Fraction((a + b - e) // 2 - z2 - z3 + 1),
                        e + half + z3,
                        Fraction(b + d + f, 2) + half - z2,
                        Fraction(a + b - e, 2) + half - 1 - z3]
                g = _term_gamma_product(nums, dens)
                if g is None or g.is_zero():
                    continue
                terms += 1
                total = _acc(total, g, -1 if (r11 + z1 + z2 + z3) % 2 else 1)
    if total.is_zero():
        return Fraction(0), terms
    value = (gamma_ratio_product(pre_nums, pre_dens) * total) / factorial(n - 3)
    return value.to_rational() * _abcdef(labels), terms


# ---------------------------------------------------------------------------
# stretched and near-stretched closed forms
# ---------------------------------------------------------------------------

def _c_stretched(labels: SixJLabels) -> Fraction:
    arr = shelepin(labels)
    r = arr.r
    if r(1, 1) != 0:
        raise ValueError("stretched closed form needs e = a + b")
    a, b, e = labels.a, labels.b, labels.e
    n = labels.n
    tau = Fraction(n, 2) - 1
    half = Fraction(n, 2)
    a1, a2, a3, _ = arr.alpha
    nums = [a + tau, b + tau, r(3, 2) + tau, r(2, 3) + tau,
            Fraction(a1 + n - 2), r(3, 4) + tau, r(2, 4) + tau]
    dens = [Fraction(n - 2), half, half, half, e + half,
            Fraction(r(1, 4) + 1), Fraction(r(1, 2) + 1), Fraction(r(2, 1) + 1),
            a3 + half, Fraction(r(1, 3) + 1), Fraction(r(3, 1) + 1), a2 + half]
    return gamma_ratio_product(nums, dens).to_rational() * _abcdef(labels)


def _c_near_stretched(labels: SixJLabels) -> Fraction:
    arr = shelepin(labels)
    r = arr.r
    if r(1, 1) != 1:
        raise ValueError("near-stretched closed form needs e = a + b - 2")
    a, b, e, d, c, f = labels.six
    n = labels.n
    tau = Fraction(n, 2) - 1
    half = Fraction(n, 2)
    a1, a2, a3, _ = arr.alpha
    nums = [a + tau - 1, b + tau - 1, r(3, 2) + tau, r(2, 3) + tau,
            Fraction(a1 + n - 2), r(3, 4) + tau, r(2, 4) + tau]
    dens = [Fraction(n - 2), half, half, half, e + half + 1,
            Fraction(r(1, 4) + 1), Fraction(r(1, 2) + 1), Fraction(r(2, 1) + 1),
            a3 + half, Fraction(r(1, 3) + 1), Fraction(r(3, 1) + 1), a2 + half]
    bracket = (
        2 * a * (c + d - e) * (e - c + d + n - 2)
        * ((c + d - e + n - 4) * (b + d - f) * (a + c - f + n - 4)
           - (c + d + e + 2 * n - 4) * (a - c + f) * (b - d + f))
        + (2 * e + n) * (a - c + f) * (c + f - a + n - 2)
        * ((c + d + e + 2 * n - 4) * (b - d + f) * (a - c + f + n - 4)
           - (b + d - f) * (c + d - e) * (a + c - f + n - 4))
    )
    base = gamma_ratio_product(nums, dens).to_rational()
    return base * bracket * _abcdef(labels) / 64


# ---------------------------------------------------------------------------
# public core-coefficient entry point
# ---------------------------------------------------------------------------

def c_alpha(labels: SixJLabels, method: str = "A", allow_n3: bool = False) -> CAlpha:
    """The rational core coefficient by the requested method, at the literal labels."""
    _check_n(labels.n, allow_n3)
    if method not in METHODS and method not in FACTORIAL_METHODS:
        raise ValueError(f"unknown method {method}")
    if not admissible(labels):
        return CAlpha(Fraction(0), labels, method, 0)
    if method in ("A", "B", "C"):
        value, terms = _c_pochhammer(labels, method)
    elif method == "AFactorial":
        value, terms = _c_factorial_ab(labels, "a")
    elif method == "BFactorial":
        value, terms = _c_factorial_ab(labels, "b")
    elif method == "CFactorial":
        value, terms = _c_factorial_c(labels)
    elif method == "T3":
        value, terms = _c_triple(labels)
    elif method == "StretchedE":
        value, terms = _c_stretched(labels), 1
    else:
        value, terms = _c_near_stretched(labels), 2
    return CAlpha(value, labels, method, terms)


# ---------------------------------------------------------------------------
# method selection over the symmetry orbit
# ---------------------------------------------------------------------------

class MethodChoice(NamedTuple):
    method: str
    predicted_terms: int
    variant: SixJLabels


def predicted_terms(method: str, r11: int, r13: int, r31: int) -> int:
    """Work estimate: the summation lattice size of the method."""
    if method == "StretchedE":
        return 1
    if method == "NearStretchedE":
        return 2
    if method == "A":
        return (r11 + 1) * (r13 + 1)
    if method in ("B", "C"):
        return (r11 + 1) * (r31 + 1)
    if method == "T3":
        return (r11 + 1) * (r11 + 2) * (2 * r11 + 3) // 6
    raise ValueError(f"unknown method {method}")


def select_method(labels: SixJLabels) -> MethodChoice:
    """Cheapest (method, orbit variant) pair; deterministic tie-breaking."""
    best: tuple[int, int, tuple[int, ...]] | None = None
    best_choice: MethodChoice | None = None
    for variant in sorted(symmetry_orbit(labels), key=lambda v: v.six):
        arr = shelepin(variant)
        r11, r13, r31 = arr.r(1, 1), arr.r(1, 3), arr.r(3, 1)
        cands = ["A", "B", "C", "T3"]
        if r11 == 0:
            cands.append("StretchedE")
        elif r11 == 1:
            cands.append("NearStretchedE")
        for m in cands:
            cost = predicted_terms(m, r11, r13, r31)
            key = (cost, _METHOD_RANK[m], variant.six)
            if best is None or key < best:
                best = key
                best_choice = MethodChoice(m, cost, variant)
    assert best_choice is not None
    return best_choice


# ---------------------------------------------------------------------------
# assembly of the full symbol
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SixJValue:
    value: SurdValue
    labels: SixJLabels
    method_used: str
    predicted_terms: int = 0


_TRIADS = (("a", "b", "e"), ("a", "c", "f"), ("b", "d", "f"), ("c", "d", "e"))


def assemble_sixj(c_value: Fraction, labels: SixJLabels) -> SurdValue:
    """Combine the rational core with the four triangular factors into the symbol."""
    if c_value == 0:
        return SurdValue.zero()
    n = labels.n
    fp = FactoredProduct()
    for t in _TRIADS:
        fp.mul(nabla_coupled_sq_fp(n, *(getattr(labels, name) for name in t)))
    fp.mul_factorial(n - 3, 4)
    fp.mul_gamma(Fraction(n, 2), 8)
    fp.mul_fraction(_abcdef(labels), -2)
    return fp.sqrt_surd() * c_value


_CACHE: "OrderedDict[tuple, SixJValue]" = OrderedDict()
_CACHE_MAX = 65536


def configure_cache(maxsize: int) -> None:
    """Resize the canonical-representative value cache."""
    global _CACHE_MAX
    _CACHE_MAX = max(0, maxsize)
    while len(_CACHE) > _CACHE_MAX:
        _CACHE.popitem(last=False)


def cache_clear() -> None:
    _CACHE.clear()


def sixj(labels: SixJLabels, method: str = "auto", allow_n3: bool = False,
         use_cache: bool = True) -> SixJValue:
    """The 6j symbol of SO(n) for symmetric representations.

    With method="auto" the symmetry orbit is scanned for the cheapest evaluation and
    the result is cached under the canonical orbit representative.  A forced method
    evaluates at the literal labels with no reorientation and no caching.
    """
    _check_n(labels.n, allow_n3)
    if not admissible(labels):
        return SixJValue(SurdValue.zero(), labels, "zero", 0)
    if method != "auto":
        ca = c_alpha(labels, method, allow_n3=allow_n3)
        return SixJValue(assemble_sixj(ca.value, labels), labels, method, ca.terms)
    key = canonical_representative(labels).six + (labels.n,)
    if use_cache and key in _CACHE:
        _CACHE.move_to_end(key)
        hit = _CACHE[key]
        return SixJValue(hit.value, labels, hit.method_used, hit.predicted_terms)
    choice = select_method(labels)
    ca = c_alpha(choice.variant, choice.method, allow_n3=allow_n3)
    value = assemble_sixj(ca.value, choice.variant)
    if use_cache and _CACHE_MAX > 0:
        _CACHE[key] = SixJValue(value, labels, choice.method, choice.predicted_terms)
        if len(_CACHE) > _CACHE_MAX:
            _CACHE.popitem(last=False)
    return SixJValue(value, labels, choice.method, choice.predicted_terms)
