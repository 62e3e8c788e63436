"""Acceptance gate: the nine headline guarantees, each at full stated scale.

Every test prints one PASS/FAIL line; pytest -v adds its own verdict per
criterion.  The heavy suites run at the same ranges the library documents,
so this file takes a few minutes in total.
"""

from sonsixj.verify import (
    run_cross_formula,
    run_kdf,
    run_oracles,
    run_performance,
    run_rationality,
    run_so4,
    run_sp,
    run_stretched,
    run_symmetry,
)


def _conclude(number: int, name: str, report, budget: float | None = None) -> None:
    within = budget is None or report.elapsed < budget
    verdict = "PASS" if (report.ok and within) else "FAIL"
    print(f"CRITERION {number} ({name}): {verdict} - {report.summary()}")
    for message in report.mismatches:
        print(f"  MISMATCH {message}")
    assert report.ok, report.summary()
    if budget is not None:
        assert report.elapsed < budget, (
            f"criterion {number} took {report.elapsed:.1f}s, budget {budget:.0f}s")


def test_criterion_1_cross_formula_agreement():
    # seven evaluators, every admissible set with labels <= 6, n in 4..9,
    # inside five minutes
    report = run_cross_formula(n_values=(4, 5, 6, 7, 8, 9), max_label=6)
    _conclude(1, "cross-formula agreement", report, budget=300.0)


def test_criterion_2_even_n_reduction_oracles():
    # both independent reduction routes agree with the evaluators for
    # n in {4, 6, 8}, and the dropped alternating phase is load-bearing
    report = run_oracles(n_values=(4, 6, 8), max_label=4)
    _conclude(2, "even-n reduction oracles", report)


def test_criterion_3_symmetry_orbit_invariance():
    # at least 200 random orbits, labels <= 10, n in 4..12, forced methods
    report = run_symmetry(count=200, max_label=10, n_values=range(4, 13))
    _conclude(3, "symmetry-orbit invariance", report)


def test_criterion_4_odd_n_rationality():
    # core coefficients at odd n in {5, 7, 9} are exact rationals
    report = run_rationality(n_values=(5, 7, 9), max_label=6)
    _conclude(4, "odd-n rationality", report)


def test_criterion_5_stretched_closed_forms():
    # closed forms match the generic evaluator whenever they apply,
    # labels <= 8, n in 4..9
    report = run_stretched(n_values=(4, 5, 6, 7, 8, 9), max_label=8)
    _conclude(5, "stretched closed forms", report)


def test_criterion_6_so4_factorization():
    # the ratio against the squared SU(2) symbol is one fixed constant
    # across at least 100 admissible cases
    report = run_so4(count=100, max_label=6)
    _conclude(6, "rank-two factorization", report)


def test_criterion_7_double_series_representations():
    # all six terminating double-series variants reproduce the core
    # coefficient, with balance and dependency relations checked throughout
    report = run_kdf(n_values=(4, 6, 8), max_label=4)
    _conclude(7, "double-series representations", report)


def test_criterion_8_symplectic_recoupling():
    # exhaustive ranks 1..3: three series agree, the column-swap relation
    # holds, vanishing is exactly characterized, values are real; under a
    # minute
    report = run_sp(n_values=(1, 2, 3))
    _conclude(8, "symplectic recoupling", report, budget=60.0)


def test_criterion_9_performance_envelope():
    # labels near 100 at n = 10 evaluate in under a second, and realized
    # term counts never exceed the predictions
    report = run_performance(n=10)
    _conclude(9, "performance envelope", report)
