"""Terminating double hypergeometric series layer.

The rational core coefficient divided by the six-label product admits six
parameterizations as a terminating Kampe de Feriet-type series

    F = sum_{s,t} (a1)_{s+t} / (s! t! (c1)_{s+t})
        * prod_i (b_i)_s (b'_i)_t / prod_j (d_j)_s (d'_j)_t * x^s y^t

with four upper and three lower parameters per axis, at x = y = 1.  This module
is a verification layer over the production double sums: it evaluates the
series generically, generates the six parameter sets with their prefactors,
validates the linear dependencies between parameters, and checks the formal
label-reflection maps that permute the six parameterizations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    GammaExact,
    PoleError,
    factorial,
    gamma_exact,
    is_nonpositive_integer,
)
from .labels import SixJLabels, admissible, reflect_labels, shelepin
from .sixj import c_alpha as _production_c_alpha

VARIANTS = ("1a", "1b", "2a", "2b", "3a", "3b")
DEPENDENCY_FAMILY = {"1a": "bala", "2a": "bala", "3b": "bala",
                     "1b": "balb", "2b": "balb", "3a": "balb"}


class IndefinitePrefactorError(ValueError):
    """A prefactor factorial or gamma argument left the definable domain."""


@dataclass(frozen=True)
class KdFParams:
    a1: Fraction
    c1: Fraction
    b: tuple[Fraction, Fraction, Fraction, Fraction]
    d: tuple[Fraction, Fraction, Fraction]
    b_prime: tuple[Fraction, Fraction, Fraction, Fraction]
    d_prime: tuple[Fraction, Fraction, Fraction]
    x: Fraction = field(default_factory=lambda: Fraction(1))
    y: Fraction = field(default_factory=lambda: Fraction(1))


def _axis_max(uppers) -> int:
    """Largest summation index allowed by the nonpositive-integer uppers."""
    stops = [-int(u) for u in uppers if is_nonpositive_integer(u)]
    if not stops:
        raise ValueError("series does not terminate: no nonpositive integer upper parameter")
    return min(stops)


def _poch(x: Fraction, k: int) -> Fraction:
    v = Fraction(1)
    for i in range(k):
        v *= x + i
    return v


def kdf_eval(p: KdFParams) -> Fraction:
    """Evaluate the terminating series exactly."""
    smax = _axis_max(p.b)
    tmax = _axis_max(p.b_prime)
    for dj in p.d:
        if is_nonpositive_integer(dj) and -int(dj) < smax:
            raise PoleError(f"denominator parameter {dj} vanishes inside the s-rectangle")
    for dj in p.d_prime:
        if is_nonpositive_integer(dj) and -int(dj) < tmax:
            raise PoleError(f"denominator parameter {dj} vanishes inside the t-rectangle")
    if is_nonpositive_integer(p.c1) and -int(p.c1) < smax + tmax:
        raise PoleError(f"coupled denominator parameter {p.c1} vanishes inside the rectangle")
    total = Fraction(0)
    for s in range(smax + 1):
        brow = Fraction(1)
        for bi in p.b:
            brow *= _poch(bi, s)
        if brow == 0:
            continue
        for dj in p.d:
            brow /= _poch(dj, s)
        brow *= p.x ** s / factorial(s)
        for t in range(tmax + 1):
            trow = Fraction(1)
            for bi in p.b_prime:
                trow *= _poch(bi, t)
            if trow == 0:
                continue
            for dj in p.d_prime:
                trow /= _poch(dj, t)
            term = (brow * trow * _poch(p.a1, s + t) * p.y ** t
                    / (factorial(t) * _poch(p.c1, s + t)))
            total += term
    return total


def _series_params(six: tuple[int, ...], n: int, variant: str) -> KdFParams:
    """Parameter lists from (possibly formal, negative) labels."""
    a, b, e, d, c, f = six
    tau = Fraction(n, 2) - 1
    al = [Fraction(c + d + e, 2), Fraction(b + d + f, 2),
          Fraction(a + c + f, 2), Fraction(a + b + e, 2)]
    be = [Fraction(a + b + c + d, 2), Fraction(a + d + e + f, 2),
          Fraction(b + c + e + f, 2)]
    (r11, r12, r13, r14), (r21, r22, r23, r24), (r31, r32, r33, r34) = (
        tuple(bi - ak for ak in al) for bi in be)
    a1_, a2_, a3_, a4_ = al
    b1_, b2_, b3_ = be

    def h(x):
        return x + tau

    if variant == "1a":
        a1 = b2_ - b1_ + 1
        c1 = h(b2_) - b1_
        bb = (-r11, -r14, h(r23), r22 + 1)
        dd = (a1, h(a4_) - r11 + 1, -h(r34) - r11 + 1)
        bp = (h(r21), h(r24), -r13, -h(r12) + 1)
        dp = (a1, -h(r32) - r13 + 1, h(a2_) - r13 + 1)
    elif variant == "1b":
        a1 = -r11 - h(r23) + 1
        c1 = -r11 - r23
        bb = (-r11, -r21, -h(a4_), h(r34))
        dd = (a1, a1_ - a4_ + 1, -r11 - r22)
        bp = (-r23, -r13, h(r32), -h(a2_))
        dp = (a1, -r13 - h(r24) + 1, h(a3_) - a2_)
    elif variant == "2a":
        a1 = -h(r34) - r11 + 1
        c1 = -r34 - r11
        bb = (-r11, -r14, h(r23), r22 + 1)
        dd = (a1, b2_ - b1_ + 1, h(a4_) - r11 + 1)
        bp = (-r34, -r31, -h(a2_), -a3_ - n + 3)
        dp = (-h(r14) - r31 + 1, -h(r24) - r31 + 1, -b3_ - n + 3)
    elif variant == "2b":
        a1 = a1_ - a4_ + 1
        c1 = h(a1_) - a4_
        bb = (-r11, -r21, h(r34), -h(a4_))
        dd = (a1, -r11 - h(r23) + 1, -r11 - r22)
        bp = (h(r14), h(r24), -r31, a1_ + n - 2)
        dp = (a1, h(a2_) - r31 + 1, a3_ - r31 + n - 2)
    elif variant == "3a":
        a1 = -h(r32) - r11 + 1
        c1 = -r32 - r11
        bb = (-r11, -r12, -h(a3_), -h(a4_))
        dd = (a1, -b1_ - n + 3, -r11 - r22)
        bp = (-r32, -r31, h(r24), h(r23))
        dp = (a1, h(a2_) - r31 + 1, h(b2_) - b3_)
    elif variant == "3b":
        a1 = a1_ - a2_ + 1
        c1 = h(a1_) - a2_
        bb = (-r11, h(r32), a1_ + n - 2, r22 + 1)
        dd = (a1, h(a3_) - r11 + 1, h(a4_) - r11 + 1)
        bp = (h(r12), -r31, -h(a2_), -h(r21) + 1)
        dp = (a1, -h(r24) - r31 + 1, -h(r23) - r31 + 1)
    else:
        raise ValueError(f"unknown variant {variant}")
    frac6 = lambda t: tuple(Fraction(v) for v in t)
    return KdFParams(Fraction(a1), Fraction(c1), frac6(bb), frac6(dd),
                     frac6(bp), frac6(dp))


def _prefactor(labels: SixJLabels, variant: str) -> GammaExact:
    n = labels.n
    tau = Fraction(n, 2) - 1
    arr = shelepin(labels)
    r = arr.r
    a1_, a2_, a3_, a4_ = (Fraction(x) for x in arr.alpha)
    b1_, b2_, b3_ = (Fraction(x) for x in arr.beta)

    def h(x):
        return x + tau

    if variant == "1a":
        sgn_exp = 0
        fnums = [a3_ + n - 3]
        fdens = [r(1, 1), r(1, 2), r(1, 3), r(1, 4), r(3, 3), b2_ - b1_]
        gnums = [h(r(2, 1)), h(r(2, 2)), h(r(2, 3)), h(r(2, 4)), h(r(3, 3)),
                 h(r(3, 4)) + r(1, 1), h(r(3, 2)) + r(1, 3)]
        gdens = [h(a3_) + 1, h(b2_) - b1_, h(a2_) - r(1, 3) + 1, h(a4_) - r(1, 1) + 1]
    elif variant == "1b":
        sgn_exp = a1_ - a3_
        fnums = [a3_ + n - 3, r(1, 1) + r(2, 2), r(1, 1) + r(2, 3)]
        fdens = [r(1, 1), r(1, 2), r(1, 3), r(2, 1), r(2, 2), r(2, 3), r(3, 3),
                 a1_ - a4_]
        gnums = [h(r(1, 2)), h(r(2, 2)), h(r(3, 2)), h(r(3, 3)), h(r(3, 4)),
                 r(1, 3) + h(r(2, 4)), r(1, 1) + h(r(2, 3))]
        gdens = [h(a2_) + 1, h(a3_) + 1, h(a4_) + 1, h(a3_) - a2_]
    elif variant == "2a":
        sgn_exp = b1_ - b3_
        fnums = [r(3, 4) + r(1, 1), b3_ + n - 3]
        fdens = [r(1, 1), r(1, 2), r(1, 4), r(3, 1), r(3, 3), r(3, 4), b2_ - b1_]
        gnums = [h(r(1, 2)), h(r(2, 2)), h(r(2, 3)), h(r(3, 3)),
                 h(r(2, 4)) + r(3, 1), h(r(3, 4)) + r(1, 1)]
        gdens = [h(a2_) + 1, h(a3_) + 1, h(a4_) - r(1, 1) + 1]
    elif variant == "2b":
        sgn_exp = 0
        fnums = [a1_ + n - 3, a3_ + n - 3, r(1, 1) + r(2, 2)]
        fdens = [r(1, 1), r(1, 2), r(2, 1), r(2, 2), r(3, 1), r(3, 3),
                 a3_ - r(3, 1) + n - 3, a1_ - a4_]
        gnums = [h(r(1, 2)), h(r(1, 4)), h(r(2, 2)), h(r(2, 4)), h(r(3, 3)),
                 h(r(3, 4)), r(1, 1) + h(r(2, 3))]
        gdens = [h(a3_) + 1, h(a4_) + 1, h(a1_) - a4_, h(a2_) - r(3, 1) + 1]
    elif variant == "3a":
        sgn_exp = b1_ - b3_
        fnums = [b1_ + n - 3, r(1, 1) + r(2, 2), r(1, 1) + r(3, 2)]
        fdens = [r(1, 1), r(1, 2), r(2, 1), r(2, 2), r(3, 1), r(3, 2), r(3, 3),
                 r(3, 4)]
        gnums = [h(r(2, 1)), h(r(2, 2)), h(r(2, 3)), h(r(2, 4)), h(r(3, 3)),
                 h(r(3, 4)), h(r(3, 2)) + r(1, 1)]
        gdens = [h(a3_) + 1, h(a4_) + 1, h(a2_) - r(3, 1) + 1, h(b2_) - b3_]
    elif variant == "3b":
        sgn_exp = 0
        fnums = [a1_ + n - 3]
        fdens = [r(1, 1), r(2, 1), r(3, 1), r(3, 3), r(3, 4), a1_ - a2_]
        gnums = [h(r(1, 2)), h(r(2, 2)), h(r(3, 2)), h(r(3, 3)), h(r(3, 4)),
                 h(r(2, 3)) + r(3, 1), h(r(2, 4)) + r(3, 1)]
        gdens = [h(a2_) + 1, h(a3_) - r(1, 1) + 1, h(a4_) - r(1, 1) + 1,
                 h(a1_) - a2_]
    else:
        raise ValueError(f"unknown variant {variant}")

    out = GammaExact(Fraction(-1 if int(sgn_exp) % 2 else 1))
    for v in fnums:
        if v != int(v) or v < 0:
            raise IndefinitePrefactorError(f"factorial of {v} in variant {variant} prefactor")
        out = out * GammaExact(Fraction(factorial(int(v))))
    for v in fdens:
        if v != int(v) or v < 0:
            raise IndefinitePrefactorError(f"factorial of {v} in variant {variant} prefactor")
        out = out / GammaExact(Fraction(factorial(int(v))))
    for v in gnums:
        if is_nonpositive_integer(v):
            raise IndefinitePrefactorError(f"gamma at {v} in variant {variant} prefactor")
        out = out * gamma_exact(Fraction(v))
    for v in gdens:
        if is_nonpositive_integer(v):
            raise IndefinitePrefactorError(f"gamma at {v} in variant {variant} prefactor")
        out = out / gamma_exact(Fraction(v))
    half = Fraction(n, 2)
    out = out / (gamma_exact(half) * gamma_exact(half) * gamma_exact(half))
    return out / GammaExact(Fraction(factorial(n - 3)))


def kdf_params_for(labels: SixJLabels, variant: str) -> tuple[KdFParams, GammaExact]:
    """Series parameters and prefactor for one of the six parameterizations."""
    if not admissible(labels):
        raise ValueError(f"labels {labels} not admissible")
    pre = _prefactor(labels, variant)
    return _series_params(labels.six, labels.n, variant), pre


def kdf_c_alpha(labels: SixJLabels, variant: str) -> Fraction:
    """Core coefficient via a series parameterization (cross-check path)."""
    params, pre = kdf_params_for(labels, variant)
    series = kdf_eval(params)
    n = labels.n
    prod = Fraction(1)
    for x in labels.six:
        prod *= Fraction(2 * x + n - 2, 2)
    return (pre * GammaExact(series)).to_rational() * prod


def check_balance(p: KdFParams, n: int | None = None) -> bool:
    """Both series axes balanced, with the documented common value."""
    lhs = p.c1 - p.a1
    s_axis = 1 + sum(p.b) - sum(p.d)
    t_axis = 1 + sum(p.b_prime) - sum(p.d_prime)
    if lhs != s_axis or lhs != t_axis:
        return False
    return n is None or lhs == Fraction(n, 2) - 2


def check_dependencies(p: KdFParams, family: str) -> bool:
    """Linear relations among parameters for the stated family."""
    a1 = p.a1
    if not (p.d[0] == a1 and p.d_prime[0] == a1):
        return False
    # c1 - a1 is tau - 1, so n is recoverable from the parameters themselves
    n4 = p.c1 - a1 + 2  # equals n/2, as a Fraction
    n = 2 * n4
    if family == "bala":
        for j in (1, 2):
            if p.d[j] + p.d_prime[j] != a1 + 1:
                return False
        for i in (0, 1, 2):
            if p.b[i] + p.b_prime[i] != p.c1:
                return False
        return p.b[3] + p.b_prime[3] == p.c1 - n + 4
    if family == "balb":
        if p.d[1] + p.d_prime[1] != a1 + 1:
            return False
        if p.d[2] + p.d_prime[2] != a1 + n - 3:
            return False
        return all(p.b[i] + p.b_prime[i] == p.c1 for i in range(4))
    raise ValueError(f"unknown dependency family {family}")


# Formal label substitutions x -> -x - n + 2 relating the six parameterizations:
# single reflections pair (1a,2a) and (1b,2b); the three-label reflection pairs
# (1a,3b) and (1b,3a).  Self-pairs record which single reflection fixes a variant.
_REFLECTION_FOR_PAIR = {
    ("1a", "2a"): "f", ("2a", "1a"): "f",
    ("1b", "2b"): "d", ("2b", "1b"): "d",
    ("1a", "3b"): "cdf", ("3b", "1a"): "cdf",
    ("1b", "3a"): "cdf", ("3a", "1b"): "cdf",
    ("1a", "1a"): "d", ("2a", "2a"): "d", ("3b", "3b"): "d",
    ("1b", "1b"): "f", ("2b", "2b"): "f", ("3a", "3a"): "f",
}


def _param_key(p: KdFParams, swap_axes: bool = False):
    if swap_axes:
        return (p.a1, p.c1, tuple(sorted(p.b_prime)), tuple(sorted(p.d_prime)),
                tuple(sorted(p.b)), tuple(sorted(p.d)))
    return (p.a1, p.c1, tuple(sorted(p.b)), tuple(sorted(p.d)),
            tuple(sorted(p.b_prime)), tuple(sorted(p.d_prime)))


def hook_reflection_map_check(labels: SixJLabels, pair: tuple[str, str]) -> bool:
    """True iff the source variant at reflected labels matches the target at the originals.

    Matching is at the level of parameter multisets, allowing the primed and
    unprimed axes to interchange (a symmetry of the series itself).
    """
    sub = _REFLECTION_FOR_PAIR.get((pair[0], pair[1]))
    if sub is None:
        raise ValueError(f"undocumented variant pair {pair}")
    reflected = reflect_labels(labels, sub)
    src = _series_params(reflected.six, labels.n, pair[0])
    dst = _series_params(labels.six, labels.n, pair[1])
    want = _param_key(dst)
    return _param_key(src) == want or _param_key(src, swap_axes=True) == want
