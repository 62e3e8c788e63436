"""Self-verification suites: every cross-check the package makes about itself.

Each suite exercises one family of identities at a configurable scale and
returns a SuiteReport; the command-line ``verify`` kind and the acceptance
tests both run these functions, so the checks exist in exactly one place.
All comparisons are exact (rational or surd equality); there are no
tolerances anywhere.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .exact import surd_normalize
from .kdf import (
    DEPENDENCY_FAMILY,
    IndefinitePrefactorError,
    VARIANTS,
    check_balance,
    check_dependencies,
    hook_reflection_map_check,
    kdf_c_alpha,
    kdf_params_for,
)
from .labels import SixJLabels, admissible, shelepin, symmetry_orbit
from .oracle import sixj_via_su2_pair, sixj_via_su2_triple, su2_6j
from .sixj import c_alpha, cache_clear, select_method, sixj
from .spn import (
    SP_METHODS,
    SpLabels,
    dim_sp,
    sp_admissible,
    sp_renormalized,
    sp_symmetry_orbit,
    sp_symmetry_transform,
    u_sp,
)

__all__ = [
    "SUITES",
    "SuiteReport",
    "run_cross_formula",
    "run_kdf",
    "run_oracles",
    "run_performance",
    "run_rationality",
    "run_so4",
    "run_sp",
    "run_stretched",
    "run_suite",
    "run_symmetry",
]

ALL_EVALUATORS = ("A", "B", "C", "T3", "AFactorial", "BFactorial", "CFactorial")

# ratio of an SO(4) 6j-symbol to the squared spin-half-label 6j-symbol,
# measured on the smallest nonzero case (the all-zero labels) and frozen
SO4_RATIO = Fraction(1)


@dataclass
class SuiteReport:
    """Outcome of one verification suite."""

    suite: str
    checks: int = 0
    mismatches: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def fail(self, message: str, cap: int = 20) -> None:
        if len(self.mismatches) < cap:
            self.mismatches.append(message)
        elif len(self.mismatches) == cap:
            self.mismatches.append("... further mismatches suppressed")

    def summary(self) -> str:
        state = "ok" if self.ok else f"{len(self.mismatches)} MISMATCHES"
        line = f"suite {self.suite}: {self.checks} checks, {state} ({self.elapsed:.1f}s)"
        if self.notes:
            line += " [" + "; ".join(self.notes) + "]"
        return line


def admissible_sets(max_label: int) -> list[tuple[int, int, int, int, int, int]]:
    """All admissible label six-tuples with every label <= max_label.

    Admissibility here is n-independent (triangles and parity), so one
    enumeration serves every n.
    """
    return [
        six
        for six in product(range(max_label + 1), repeat=6)
        if admissible(SixJLabels(*six, 4))
    ]


def random_admissible(rng: random.Random, n: int, max_label: int) -> SixJLabels:
    """One admissible label set drawn with rejection sampling."""
    while True:
        a = rng.randrange(0, max_label + 1)
        b = rng.randrange(0, max_label + 1)
        e = rng.randrange(abs(a - b), a + b + 1, 2) if a + b else 0
        c = rng.randrange(0, max_label + 1)
        d = rng.randrange(abs(c - e), c + e + 1, 2) if c + e else 0
        fs = [
            f
            for f in range(0, max_label + 1)
            if admissible(SixJLabels(a, b, e, d, c, f, n))
        ]
        if fs:
            return SixJLabels(a, b, e, d, c, rng.choice(fs), n)


def _timed(fn: Callable[[SuiteReport], None], suite: str) -> SuiteReport:
    report = SuiteReport(suite)
    t0 = time.perf_counter()
    fn(report)
    report.elapsed = time.perf_counter() - t0
    return report


def run_cross_formula(
    n_values: Sequence[int] = (4, 5, 6, 7, 8, 9), max_label: int = 6
) -> SuiteReport:
    """All seven core evaluators agree exactly on every admissible label set."""

    def body(report: SuiteReport) -> None:
        sets = admissible_sets(max_label)
        report.notes.append(f"{len(sets)} label sets, n in {list(n_values)}")
        for n in n_values:
            for six in sets:
                lab = SixJLabels(*six, n)
                ref = c_alpha(lab, ALL_EVALUATORS[0]).value
                report.checks += 1
                for method in ALL_EVALUATORS[1:]:
                    got = c_alpha(lab, method).value
                    if got != ref:
                        report.fail(f"{six} n={n}: {method} gave {got}, A gave {ref}")

    return _timed(body, "cross-formula")


def run_oracles(n_values: Sequence[int] = (4, 6, 8), max_label: int = 4) -> SuiteReport:
    """Production values equal both independently assembled even-n routes.

    Also demands that injecting the known-spurious alternating sign into the
    second route breaks the agreement somewhere, so the comparison has teeth.
    """

    def body(report: SuiteReport) -> None:
        sets = admissible_sets(max_label)
        report.notes.append(f"{len(sets)} label sets, n in {list(n_values)}")
        broke = 0
        for n in n_values:
            for six in sets:
                lab = SixJLabels(*six, n)
                ref = sixj(lab).value
                report.checks += 1
                via3 = sixj_via_su2_triple(lab)
                if via3 != ref:
                    report.fail(f"{six} n={n}: triple route gave {via3}, sixj gave {ref}")
                via2 = sixj_via_su2_pair(lab)
                if via2 != ref:
                    report.fail(f"{six} n={n}: pair route gave {via2}, sixj gave {ref}")
                if sixj_via_su2_pair(lab, reinstate_phase=True) != ref:
                    broke += 1
        if broke == 0:
            report.fail("reinstated alternating sign never changed any value")
        else:
            report.notes.append(f"reinstated sign broke {broke} cases")

    return _timed(body, "oracles")


def run_symmetry(
    count: int = 200,
    max_label: int = 10,
    n_values: Sequence[int] = tuple(range(4, 13)),
    seed: int = 20260819,
) -> SuiteReport:
    """The 6j-symbol is exactly invariant over each full symmetry orbit.

    Every orbit variant is evaluated with a forced method (no cache, no
    canonicalization) so the invariance is a property of the formulas, not
    of the lookup key.
    """

    def body(report: SuiteReport) -> None:
        rng = random.Random(seed)
        seen: set[tuple[int, ...]] = set()
        orbits = 0
        while orbits < count:
            n = rng.choice(list(n_values))
            lab = random_admissible(rng, n, max_label)
            key = lab.six + (n,)
            if key in seen:
                continue
            seen.add(key)
            orbits += 1
            orbit = sorted(symmetry_orbit(lab), key=lambda v: v.six)
            ref = sixj(lab, method="A").value
            spot = ("B", "C", "T3")
            for idx, variant in enumerate(orbit):
                report.checks += 1
                got = sixj(variant, method="A").value
                if got != ref:
                    report.fail(f"{lab.six} n={n} orbit variant {variant.six}: A broke")
                if idx < 3:
                    method = spot[idx]
                    got2 = sixj(variant, method=method).value
                    if got2 != ref:
                        report.fail(
                            f"{lab.six} n={n} orbit variant {variant.six}: {method} broke"
                        )
            if sixj(lab).value != ref:
                report.fail(f"{lab.six} n={n}: auto-selected value differs from forced A")
        report.notes.append(f"{orbits} orbits")

    return _timed(body, "symmetry")


def run_rationality(
    n_values: Sequence[int] = (5, 7, 9), max_label: int = 6
) -> SuiteReport:
    """For odd n every core coefficient is exactly rational (no residual surd)."""

    def body(report: SuiteReport) -> None:
        sets = admissible_sets(max_label)
        report.notes.append(f"{len(sets)} label sets, n in {list(n_values)}")
        for n in n_values:
            for six in sets:
                lab = SixJLabels(*six, n)
                report.checks += 1
                for method in ("A", "B", "C", "T3"):
                    value = c_alpha(lab, method).value
                    if not isinstance(value, Fraction):
                        report.fail(f"{six} n={n} {method}: non-rational {value!r}")

    return _timed(body, "rationality")


def run_stretched(
    n_values: Sequence[int] = (4, 5, 6, 7, 8, 9), max_label: int = 8
) -> SuiteReport:
    """Closed forms for boundary couplings equal the general evaluator."""

    def body(report: SuiteReport) -> None:
        stretched = []
        near = []
        for six in admissible_sets(max_label):
            r11 = shelepin(SixJLabels(*six, 4)).r(1, 1)
            if r11 == 0:
                stretched.append(six)
            elif r11 == 1:
                near.append(six)
        report.notes.append(f"{len(stretched)} stretched, {len(near)} near-stretched sets")
        for n in n_values:
            for six, method in [(s, "StretchedE") for s in stretched] + [
                (s, "NearStretchedE") for s in near
            ]:
                lab = SixJLabels(*six, n)
                report.checks += 1
                closed = c_alpha(lab, method).value
                general = c_alpha(lab, "A").value
                if closed != general:
                    report.fail(f"{six} n={n}: {method} gave {closed}, A gave {general}")

    return _timed(body, "stretched")


def run_so4(count: int = 100, max_label: int = 6) -> SuiteReport:
    """At n = 4 the 6j-symbol is the square of the half-label spin 6j-symbol.

    The proportionality constant is measured on the first nonzero case in
    lexicographic order and must equal the frozen SO4_RATIO = 1 everywhere.
    """

    def body(report: SuiteReport) -> None:
        measured: Fraction | None = None
        nonzero = 0
        for six in admissible_sets(max_label):
            lab = SixJLabels(*six, 4)
            value = sixj(lab).value
            w_sq = su2_6j(*[Fraction(x, 2) for x in six]).square()
            report.checks += 1
            if w_sq == 0:
                if not value.is_zero():
                    report.fail(f"{six}: spin 6j vanishes but SO(4) value is {value}")
                continue
            if not value.is_rational():
                report.fail(f"{six}: SO(4) value not rational: {value}")
                continue
            ratio = value.to_rational() / w_sq
            if measured is None:
                measured = ratio
                report.notes.append(f"measured constant {measured} on {six}")
            if ratio != measured:
                report.fail(f"{six}: ratio {ratio} differs from measured {measured}")
            nonzero += 1
            if nonzero >= count and measured is not None:
                break
        if measured != SO4_RATIO:
            report.fail(f"measured constant {measured} differs from frozen {SO4_RATIO}")
        report.notes.append(f"{nonzero} nonzero cases")

    return _timed(body, "so4")


def run_kdf(n_values: Sequence[int] = (4, 6, 8), max_label: int = 4) -> SuiteReport:
    """Every double-series variant reproduces the core coefficient exactly.

    Variants whose prefactor is undefined on a label set are skipped (the
    series representation does not exist there); balance and parameter
    dependencies are asserted on every parameter set that is built, and the
    reflection maps are asserted for the four documented variant pairs.
    """

    reflection_pairs = (("1a", "2a"), ("1b", "2b"), ("1a", "3b"), ("1b", "3a"))

    def body(report: SuiteReport) -> None:
        sets = admissible_sets(max_label)
        report.notes.append(f"{len(sets)} label sets, n in {list(n_values)}")
        skipped = 0
        for n in n_values:
            for six in sets:
                lab = SixJLabels(*six, n)
                ref = c_alpha(lab, "A").value
                for variant in VARIANTS:
                    try:
                        params, _ = kdf_params_for(lab, variant)
                    except IndefinitePrefactorError:
                        skipped += 1
                        continue
                    report.checks += 1
                    if not check_balance(params, n):
                        report.fail(f"{six} n={n} {variant}: balance relations broke")
                        continue
                    if not check_dependencies(params, DEPENDENCY_FAMILY[variant]):
                        report.fail(f"{six} n={n} {variant}: dependency relations broke")
                        continue
                    got = kdf_c_alpha(lab, variant)
                    if got != ref:
                        report.fail(f"{six} n={n} {variant}: series gave {got}, core {ref}")
                for pair in reflection_pairs:
                    report.checks += 1
                    if not hook_reflection_map_check(lab, pair):
                        report.fail(f"{six} n={n}: reflection map failed for {pair}")
        report.notes.append(f"{skipped} undefined-prefactor skips")

    return _timed(body, "kdf")


def run_sp(n_values: Sequence[int] = (1, 2, 3)) -> SuiteReport:
    """Exhaustive symplectic checks for small rank.

    Methods agree everywhere; the coefficient vanishes exactly when a triad
    half-sum exceeds n; the column-swap relation holds with its computed
    phase; the renormalized symbol is invariant over all 24 rearrangements;
    all values are real.
    """

    def body(report: SuiteReport) -> None:
        for n in n_values:
            labs = []
            for six in product(range(n + 1), repeat=6):
                lab = SpLabels(*six, n)
                if all(
                    (six[i] + six[j] + six[k]) % 2 == 0
                    and six[i] + six[j] >= six[k]
                    and six[j] + six[k] >= six[i]
                    and six[k] + six[i] >= six[j]
                    for i, j, k in ((0, 1, 2), (0, 4, 5), (1, 3, 5), (4, 3, 2))
                ):
                    labs.append(lab)
            admissible_count = 0
            for lab in labs:
                va = u_sp(lab, "a").value
                report.checks += 1
                for method in ("b", "c"):
                    got = u_sp(lab, method).value
                    if got != va:
                        report.fail(f"{lab.six} n={n}: method {method} gave {got}, a gave {va}")
                if va.radicand < 1:
                    report.fail(f"{lab.six} n={n}: non-real value {va}")
                if sp_admissible(lab):
                    admissible_count += 1
                    if va.is_zero():
                        report.fail(f"{lab.six} n={n}: admissible coupling vanished")
                    swapped, phase = sp_symmetry_transform(lab)
                    lhs = u_sp(swapped, "b").value / surd_normalize(
                        1, dim_sp(n, lab.b) * dim_sp(n, lab.c)
                    )
                    rhs = va / surd_normalize(1, dim_sp(n, lab.e) * dim_sp(n, lab.f))
                    if lhs != rhs * phase:
                        report.fail(f"{lab.six} n={n}: column-swap relation broke")
                    s_ref = sp_renormalized(lab, "a")
                    for variant in sp_symmetry_orbit(lab):
                        report.checks += 1
                        if sp_renormalized(variant, "c") != s_ref:
                            report.fail(
                                f"{lab.six} n={n}: renormalized symbol changed at {variant.six}"
                            )
                else:
                    if not va.is_zero():
                        report.fail(f"{lab.six} n={n}: out-of-range coupling is nonzero: {va}")
            report.notes.append(f"n={n}: {len(labs)} triad-coupled sets, {admissible_count} admissible")

    return _timed(body, "sp")


def run_performance(n: int = 10, seed: int = 4853) -> SuiteReport:
    """A large-label evaluation finishes fast and term predictions are bounds."""

    def body(report: SuiteReport) -> None:
        cache_clear()
        big = SixJLabels(96, 100, 98, 102, 94, 100, n)
        t0 = time.perf_counter()
        value = sixj(big, use_cache=False)
        dt = time.perf_counter() - t0
        report.checks += 1
        report.notes.append(f"labels ~100 evaluation: {dt * 1000:.0f} ms via {value.method_used}")
        if dt >= 1.0:
            report.fail(f"large-label evaluation took {dt:.2f}s (budget 1s)")
        choice = select_method(big)
        actual = c_alpha(choice.variant, choice.method).terms
        report.checks += 1
        if actual > value.predicted_terms:
            report.fail(f"nonzero terms {actual} exceed prediction {value.predicted_terms}")
        rng = random.Random(seed)
        for _ in range(50):
            lab = random_admissible(rng, n, 20)
            choice = select_method(lab)
            result = c_alpha(choice.variant, choice.method)
            report.checks += 1
            if result.terms > choice.predicted_terms:
                report.fail(
                    f"{lab.six}: nonzero terms {result.terms} exceed "
                    f"prediction {choice.predicted_terms}"
                )

    return _timed(body, "performance")


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "cross-formula": run_cross_formula,
    "oracles": run_oracles,
    "symmetry": run_symmetry,
    "rationality": run_rationality,
    "stretched": run_stretched,
    "so4": run_so4,
    "kdf": run_kdf,
    "sp": run_sp,
    "performance": run_performance,
}


def run_suite(name: str, **kwargs) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(**kwargs)
