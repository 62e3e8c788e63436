"""Label arrays for SO(n) 6j symbols and their 144-element symmetry orbit.

A 6j symbol of symmetric representations carries six nonnegative integer labels
arranged as {a b e; d c f}.  The triangle structure of the four coupled triads
(a,b,e), (a,c,f), (b,d,f), (c,d,e) is captured by a rectangular array r[i][k] =
beta_i - alpha_k built from the triad half-sums; row and column permutations of
that array act on the labels and generate an orbit of up to 3! * 4! = 144
equivalent symbols.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, NamedTuple


class ParityError(ValueError):
    """A triad label sum is odd, so the half-sum array does not exist."""


class SixJLabels(NamedTuple):
    """Labels {a b e; d c f} of SO(n); n is carried along with the six labels."""

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

    def replace_six(self, six: Iterable[int]) -> "SixJLabels":
        a, b, e, d, c, f = six
        return SixJLabels(a, b, e, d, c, f, self.n)


TRIADS = ((0, 1, 2), (0, 4, 5), (1, 3, 5), (4, 3, 2))  # indices into (a,b,e,d,c,f)


def triangle_ok(l1: int, l2: int, l3: int) -> bool:
    """Triangle condition for one triad: even sum and all pairwise differences bounded."""
    if (l1 + l2 + l3) % 2:
        return False
    return l1 + l2 >= l3 and l2 + l3 >= l1 and l3 + l1 >= l2


def parity_ok(labels: SixJLabels) -> bool:
    """All four triad sums even."""
    six = labels.six
    return all(sum(six[i] for i in t) % 2 == 0 for t in TRIADS)


def admissible(labels: SixJLabels) -> bool:
    """Nonnegative labels satisfying all four triangle conditions."""
    six = labels.six
    if any(x < 0 for x in six):
        return False
    return all(triangle_ok(*(six[i] for i in t)) for t in TRIADS)


_PERMS3 = tuple(permutations(range(3)))
_PERMS4 = tuple(permutations(range(4)))


@dataclass(frozen=True)
class RArray:
    """Triad half-sum array: alpha_k from the four triads, beta_i from label pair sums.

    The rectangular entries r[i][k] = beta_i - alpha_k are the twelve triangle slacks
    (halved); the array is admissible exactly when all of them are nonnegative.
    """

    alpha: tuple[int, int, int, int]
    beta: tuple[int, int, int]

    def __post_init__(self) -> None:
        if sum(self.alpha) != sum(self.beta):
            raise ValueError("alpha and beta totals disagree")

    def r(self, i: int, k: int) -> int:
        """Entry r[i][k], 1-based."""
        return self.beta[i - 1] - self.alpha[k - 1]

    @property
    def rows(self) -> tuple[tuple[int, int, int, int], ...]:
        return tuple(tuple(b - a for a in self.alpha) for b in self.beta)

    def admissible(self) -> bool:
        return all(b - a >= 0 for b in self.beta for a in self.alpha)

    def permuted(self, row_perm: tuple[int, ...], col_perm: tuple[int, ...]) -> "RArray":
        return RArray(
            tuple(self.alpha[k] for k in col_perm),
            tuple(self.beta[i] for i in row_perm),
        )

    def labels(self, n: int) -> SixJLabels:
        a1, a2, a3, a4 = self.alpha
        b1, b2, b3 = self.beta
        return SixJLabels(
            a=a3 + a4 - b3,
            b=a2 + a4 - b2,
            e=a1 + a4 - b1,
            d=a1 + a2 - b3,
            c=a1 + a3 - b2,
            f=a2 + a3 - b1,
            n=n,
        )


def shelepin(labels: SixJLabels) -> RArray:
    """Half-sum array of the label set; raises ParityError on odd triad sums."""
    if not parity_ok(labels):
        raise ParityError(f"odd triad sum in {labels.six}")
    a, b, e, d, c, f = labels.six
    alpha = ((c + d + e) // 2, (b + d + f) // 2, (a + c + f) // 2, (a + b + e) // 2)
    beta = ((a + b + c + d) // 2, (a + d + e + f) // 2, (b + c + e + f) // 2)
    return RArray(alpha, beta)


def labels_from_rarray(arr: RArray, n: int) -> SixJLabels:
    """Inverse of shelepin for the given n."""
    return arr.labels(n)


def orbit_variants(labels: SixJLabels) -> list[SixJLabels]:
    """All 144 row/column rearrangements as label sets (with repetitions)."""
    arr = shelepin(labels)
    n = labels.n
    return [
        arr.permuted(rp, cp).labels(n) for rp in _PERMS3 for cp in _PERMS4
    ]


def symmetry_orbit(labels: SixJLabels) -> frozenset[SixJLabels]:
    """Distinct label sets reachable by array rearrangements; size divides 144."""
    return frozenset(orbit_variants(labels))


def canonical_representative(labels: SixJLabels) -> SixJLabels:
    """Lexicographically smallest (a, b, e, d, c, f) in the orbit."""
    return min(symmetry_orbit(labels), key=lambda ls: ls.six)


_POSITIONS = {"a": 0, "b": 1, "e": 2, "d": 3, "c": 4, "f": 5}


def reflect_labels(labels: SixJLabels, names: str) -> SixJLabels:
    """Formal substitution x -> -x - n + 2 applied to the named label positions."""
    six = list(labels.six)
    n = labels.n
    for ch in names:
        i = _POSITIONS[ch]
        six[i] = -six[i] - n + 2
    return labels.replace_six(six)


def hook_reflect(labels: SixJLabels, kind: str) -> SixJLabels:
    """Hook continuation of labels: 'single_d' reflects d, 'triple_cdf' reflects c, d, f."""
    if kind == "single_d":
        return reflect_labels(labels, "d")
    if kind == "triple_cdf":
        return reflect_labels(labels, "cdf")
    raise ValueError(f"unknown hook reflection kind: {kind}")
