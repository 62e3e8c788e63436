"""Recoupling coefficients of Sp(2n) with six antisymmetric irreps.

A single-column irrep of Sp(2n) is labelled by its column height nu.  The
recoupling coefficient for six such irreps is a rescaled orthogonal 6j-symbol
continued to rank -2n.  The double sums evaluated here are already continued:
they are the core double series specialized to tau = -n - 1 with the rank
parameter replaced by -2n, written as factorial series so that every
Pochhammer factor is an exact integer and any term whose factorial-ratio
expansion needs a negative-argument factorial in a denominator is zero.

Conventions fixed throughout: the overall sign of ``u_sp`` is (-1)**beta1
(with the companion exponent beta2 entering the column-swap relation of
``sp_symmetry_transform``, whose phase then collapses to +1).  Under this
pair of choices the dimension-renormalized symbol ``sp_renormalized`` is
real and invariant under all 24 classical rearrangements of the label
array, with no residual sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, NamedTuple

from .exact import FactoredProduct, SurdValue, poch_int
from .labels import RArray, SixJLabels, TRIADS, shelepin, triangle_ok

__all__ = [
    "SP_METHODS",
    "SpLabels",
    "SpU",
    "dim_sp",
    "sp_admissible",
    "sp_renormalized",
    "sp_sum_terms",
    "sp_symmetry_orbit",
    "sp_symmetry_transform",
    "u_sp",
]

SP_METHODS = ("a", "b", "c")


class SpLabels(NamedTuple):
    """Labels {a b e; d c f} of Sp(2n); each entry is a column height."""

    a: int
    b: int
    e: int
    d: int
    c: int
    f: int
    n: int

    @property
    def six(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.e, self.d, self.c, self.f)

    def replace_six(self, six) -> "SpLabels":
        a, b, e, d, c, f = six
        return SpLabels(a, b, e, d, c, f, self.n)


@dataclass(frozen=True)
class SpU:
    """One symplectic recoupling coefficient together with its inputs."""

    value: SurdValue
    labels: SpLabels
    method: str


def dim_sp(n: int, nu: int) -> int:
    """Dimension of the height-nu single-column irrep of Sp(2n)."""
    if n < 1:
        raise ValueError("rank n must be a positive integer")
    if not 0 <= nu <= n:
        raise ValueError(f"column height {nu} outside 0..{n}")
    d = Fraction(2 * factorial(2 * n + 1) * (n - nu + 1), factorial(nu) * factorial(2 * n - nu + 2))
    if d.denominator != 1 or d <= 0:
        raise AssertionError(f"dimension formula gave non-integer {d}")
    return d.numerator


def _rarray(labels: SpLabels) -> RArray:
    return shelepin(SixJLabels(*labels.six, labels.n))


def sp_admissible(labels: SpLabels) -> bool:
    """True when all four triads couple and every triad half-sum fits in n."""
    six = labels.six
    if any(x < 0 for x in six):
        return False
    if not all(triangle_ok(*(six[i] for i in t)) for t in TRIADS):
        return False
    return all(labels.n - ak >= 0 for ak in _rarray(labels).alpha)


def sp_sum_terms(arr: RArray, n: int, method: str) -> Iterator[tuple[tuple[int, int], int]]:
    """Yield ((x1, x2), term) for the double factorial series of one method.

    Terms are exact integers including the binomial weights and the
    (-1)**(x1+x2) sign; zero terms (a Pochhammer range crossing zero) are
    yielded as zeros so callers can align term lists positionally.
    """
    r11, r12, r13, r14 = arr.rows[0]
    r21, r22, r23, r24 = arr.rows[1]
    r31, r32, r33, r34 = arr.rows[2]
    a1, a2, a3, a4 = arr.alpha
    b1, b2, b3 = arr.beta
    if method == "a":
        for x1 in range(r11 + 1):
            base = (
                poch_int(-r14, x1)
                * poch_int(r22 + 1, x1)
                * poch_int(r23 - n - 1, x1)
                * poch_int(-r21, r11 - x1)
                * poch_int(-a4 + n + 1, r11 - x1)
                * poch_int(r34 - n - 1, r11 - x1)
                * comb(r11, x1)
            )
            for x2 in range(r13 + 1):
                term = (
                    base
                    * poch_int(r24 - n - 1, x2)
                    * poch_int(-r12 + n + 2, x2)
                    * poch_int(-a2 + n + 1, r13 - x2)
                    * poch_int(r32 - n - 1, r13 - x2)
                    * poch_int(b2 - b1 + x2 + 1, x1)
                    * poch_int(-r21 + n + 2 - x2, r11 - x1)
                    * comb(r13, x2)
                )
                yield (x1, x2), (-term if (x1 + x2) % 2 else term)
    elif method == "b":
        for x1 in range(r11 + 1):
            base = (
                poch_int(-r14, x1)
                * poch_int(r22 + 1, x1)
                * poch_int(r23 - n - 1, x1)
                * poch_int(-r21, r11 - x1)
                * poch_int(r34 - n - 1, r11 - x1)
                * poch_int(-a4 + n + 1, r11 - x1)
                * comb(r11, x1)
            )
            for x2 in range(r31 + 1):
                term = (
                    base
                    * poch_int(-a2 + n + 1, x2)
                    * poch_int(-a3 + 2 * n + 3, x2)
                    * poch_int(r24 - n - 1, r31 - x2)
                    * poch_int(a1 - 2 * n - 2, r31 - x2)
                    * poch_int(r34 - x2 + 1, r11 - x1)
                    * poch_int(-r34 - r11 + n + x2 + 2, x1)
                    * comb(r31, x2)
                )
                yield (x1, x2), (-term if (x1 + x2) % 2 else term)
    elif method == "c":
        for x1 in range(r11 + 1):
            base = (
                poch_int(-r12, x1)
                * poch_int(-a3 + n + 1, x1)
                * poch_int(-a4 + n + 1, x1)
                * poch_int(r32 - n - 1, r11 - x1)
                * poch_int(r22 + 1, r11 - x1)
                * poch_int(a1 - 2 * n - 2, r11 - x1)
                * comb(r11, x1)
            )
            for x2 in range(r31 + 1):
                term = (
                    base
                    * poch_int(r23 - n - 1, x2)
                    * poch_int(r24 - n - 1, x2)
                    * poch_int(-a2 + n + 1, r31 - x2)
                    * poch_int(-r21 + n + 2, r31 - x2)
                    * poch_int(-r32 - r11 + n + x2 + 2, x1)
                    * poch_int(r32 - x2 + 1, r11 - x1)
                    * comb(r31, x2)
                )
                yield (x1, x2), (-term if (x1 + x2) % 2 else term)
    else:
        raise ValueError(f"unknown method {method!r}")


def _sqrt_block(labels: SpLabels, arr: RArray) -> SurdValue:
    """Square root of d_e d_f times the normalization product.

    Every factorial argument here is nonnegative for admissible labels: the
    triad half-sums obey alpha_k <= n, and each r_ik is at most the smallest
    label in a pair bounded by an alpha, so r_ik <= n as well.
    """
    n = labels.n
    fp = FactoredProduct()
    fp.mul_int(dim_sp(n, labels.e))
    fp.mul_int(dim_sp(n, labels.f))
    for row in arr.rows:
        for rik in row:
            if rik < 0 or n + 1 - rik < 0:
                raise AssertionError(f"normalization factorial argument below zero: r={rik}, n={n}")
            fp.mul_factorial(rik)
            fp.mul_factorial(n + 1 - rik)
    for ak in arr.alpha:
        if n - ak < 0:
            raise AssertionError(f"normalization factorial argument below zero: alpha={ak}, n={n}")
        fp.mul_factorial(2 * n + 2 - ak)
        fp.mul_factorial(n - ak, -1)
    return fp.sqrt_surd()


def u_sp(labels: SpLabels, method: str = "a") -> SpU:
    """Recoupling coefficient of Sp(2n) for six single-column irreps.

    The three methods differ only in which double factorial series carries
    the sum; their values agree exactly.  Inadmissible couplings (a broken
    triad, or any triad half-sum exceeding n) give an exact zero, not an
    error.
    """
    if method not in SP_METHODS:
        raise ValueError(f"unknown method {method!r}")
    n = labels.n
    if n < 1:
        raise ValueError("rank n must be a positive integer")
    if any(x < 0 for x in labels.six):
        raise ValueError(f"negative column height in {labels.six}")
    six = labels.six
    if not all(triangle_ok(*(six[i] for i in t)) for t in TRIADS):
        return SpU(SurdValue.zero(), labels, method)
    arr = _rarray(labels)
    a1, a2, a3, a4 = arr.alpha
    b1, b2, b3 = arr.beta
    if any(n - ak < 0 for ak in arr.alpha):
        return SpU(SurdValue.zero(), labels, method)

    total = sum(term for _, term in sp_sum_terms(arr, n, method))
    r = arr.rows
    fact_dens = {
        "a": (r[0][0], r[0][1], r[0][2], r[0][3], r[1][0], r[2][2]),
        "b": (r[0][0], r[0][1], r[0][3], r[1][0], r[2][0], r[2][2]),
        "c": (r[0][0], r[0][1], r[1][0], r[2][0], r[2][2], r[2][3]),
    }[method]
    shifted_dens = {
        "a": (r[1][1], r[1][2], r[1][3], r[2][1], r[2][2], r[2][3]),
        "b": (r[0][1], r[1][1], r[1][2], r[1][3], r[2][2], r[2][3]),
        "c": (r[1][1], r[1][2], r[1][3], r[2][1], r[2][2], r[2][3]),
    }[method]
    lead_alpha = a3 if method == "a" else a1
    den = factorial(2 * n + 2) * factorial(n) * factorial(2 * n + 2 - lead_alpha)
    for v in fact_dens:
        den *= factorial(v)
    for v in shifted_dens:
        den *= factorial(n - v + 1)
    num = factorial(n - a2) * factorial(n - a3) * factorial(n - a4)
    rational = Fraction(num, den) * total
    sign_exp = b3 if method == "c" else b1
    if sign_exp % 2:
        rational = -rational
    return SpU(_sqrt_block(labels, arr) * rational, labels, method)


def sp_symmetry_transform(labels: SpLabels) -> tuple[SpLabels, int]:
    """Swap the b/e and c/f label pairs; return the new labels and the phase.

    The phase relates the two dimension-renormalized coefficients:

        u(a,e,b; d,f,c) / sqrt(d_b d_c) = phase * u(a,b,e; d,c,f) / sqrt(d_e d_f)

    with exponent beta2 - beta1 + (b + c - e - f)/2 evaluated on the input
    labels.  Under the sign conventions of this module that exponent is
    always even, so the phase is identically +1; it is still computed from
    the formula rather than hard-coded.
    """
    a, b, e, d, c, f = labels.six
    arr = _rarray(labels)
    exponent = arr.beta[1] - arr.beta[0] + (b + c - e - f) // 2
    swapped = SpLabels(a, e, b, d, f, c, labels.n)
    return swapped, (-1 if exponent % 2 else 1)


def sp_symmetry_orbit(labels: SpLabels) -> list[SpLabels]:
    """The 24 rearrangements under which the renormalized symbol is invariant.

    Columns of the array {a b e; d c f} may be permuted freely, and the top
    and bottom entries of any two columns may be exchanged simultaneously.
    """
    a, b, e, d, c, f = labels.six
    cols = ((a, d), (b, c), (e, f))
    out = []
    for p0, p1, p2 in (
        (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0),
    ):
        ordered = (cols[p0], cols[p1], cols[p2])
        for swap in ((), (0, 1), (0, 2), (1, 2)):
            arranged = [
                (lo, hi) if i in swap else (hi, lo)
                for i, (hi, lo) in enumerate(ordered)
            ]
            (na, nd), (nb, nc), (ne, nf) = arranged
            out.append(SpLabels(na, nb, ne, nd, nc, nf, labels.n))
    return out


def sp_renormalized(labels: SpLabels, method: str = "a") -> SurdValue:
    """u_sp / sqrt(d_e d_f): real and invariant under all 24 rearrangements."""
    coeff = u_sp(labels, method)
    if coeff.value.is_zero():
        return SurdValue.zero()
    fp = FactoredProduct()
    fp.mul_int(dim_sp(labels.n, labels.e))
    fp.mul_int(dim_sp(labels.n, labels.f))
    return coeff.value / fp.sqrt_surd()
