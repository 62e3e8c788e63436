"""Core 6j evaluation: dimensions, 3j prefactors, all evaluators, caching."""

from fractions import Fraction

import pytest

from sonsixj.exact import SurdValue, surd_normalize
from sonsixj.labels import SixJLabels, shelepin
from sonsixj.sixj import (
    FACTORIAL_METHODS,
    METHODS,
    c_alpha,
    cache_clear,
    configure_cache,
    dim,
    dim_formal,
    predicted_terms,
    select_method,
    sixj,
    threej_zero,
)
from sonsixj.verify import admissible_sets


def test_dim_values():
    assert dim(5, 2) == 14
    assert dim(4, 1) == 4
    assert dim(10, 3) == 210
    assert dim(6, 0) == 1
    assert dim(7, 1) == 7


def test_dim_formal_matches_dim():
    for n in range(4, 11):
        for l in range(0, 6):
            assert dim_formal(n, l) == dim(n, l)


def test_threej_diagonal_law():
    # {l l 0} with zero projections squares to 1/dim
    for n in (4, 5, 6, 9):
        for l in range(0, 5):
            v = threej_zero(n, l, l, 0)
            assert v.sign() >= 0
            assert v.square() == Fraction(1, dim(n, l))


def test_threej_values():
    assert threej_zero(6, 2, 2, 0) == surd_normalize(Fraction(1, 10), 5)
    assert threej_zero(5, 2, 2, 2) == surd_normalize(Fraction(1, 42), 42)
    assert threej_zero(4, 1, 1, 2) == surd_normalize(Fraction(1, 6), 3)


def test_threej_vanishing():
    # odd total or broken triangle
    assert threej_zero(6, 2, 2, 1).is_zero()
    assert threej_zero(6, 3, 1, 1).is_zero()


def test_sixj_all_zero_labels():
    for n in range(4, 10):
        assert sixj(SixJLabels(0, 0, 0, 0, 0, 0, n)).value == SurdValue.of_rational(1)


def test_sixj_inadmissible_is_zero():
    out = sixj(SixJLabels(0, 0, 1, 0, 0, 1, 6))
    assert out.value.is_zero()
    assert out.method_used == "zero"
    assert out.predicted_terms == 0
    assert sixj(SixJLabels(1, 1, 1, 1, 1, 1, 6)).value.is_zero()


# Frozen reference values.  Each was computed by the two independent SU(2)
# reduction routes for even n, which agreed, and is pinned here as a literal.
FROZEN_SIXJ = {
    (2, 2, 2, 2, 2, 2, 4): Fraction(1, 36),
    (2, 2, 2, 2, 2, 2, 6): Fraction(9, 400),
    (2, 2, 4, 2, 2, 4, 6): Fraction(1, 2100),
    (1, 1, 2, 1, 1, 2, 8): Fraction(3, 280),
    (4, 2, 2, 2, 4, 2, 4): Fraction(1, 20),
    (3, 3, 4, 3, 3, 2, 6): Fraction(1, 175),
}

# Frozen core coefficients for odd n, where no reduction route exists.  Each
# was computed by the three structurally distinct evaluator families
# (double-sum, factorial-form, and triple-sum), which agreed exactly.
FROZEN_CALPHA = {
    (2, 2, 2, 2, 2, 2, 5): Fraction(9604, 81),
    (1, 1, 2, 1, 1, 2, 7): Fraction(70, 3),
    (2, 4, 2, 4, 2, 4, 9): Fraction(60623640, 2197),
}


def test_sixj_frozen_values():
    for six_n, expected in FROZEN_SIXJ.items():
        lab = SixJLabels(*six_n)
        assert sixj(lab).value == SurdValue.of_rational(expected), six_n


def test_calpha_frozen_values():
    for six_n, expected in FROZEN_CALPHA.items():
        lab = SixJLabels(*six_n)
        for method in ("A", "B", "T3"):
            assert c_alpha(lab, method).value == expected, (six_n, method)


def test_all_evaluators_agree():
    for six in [(2, 2, 2, 2, 2, 2), (1, 3, 2, 3, 1, 4), (2, 2, 4, 4, 2, 2),
                (0, 2, 2, 2, 0, 2), (3, 1, 2, 1, 3, 2)]:
        for n in (4, 5, 7):
            lab = SixJLabels(*six, n)
            values = {m: c_alpha(lab, m).value for m in METHODS + FACTORIAL_METHODS
                      if m not in ("StretchedE", "NearStretchedE")}
            assert len(set(values.values())) == 1, (six, n, values)


def test_stretched_methods_match_generic():
    # fully stretched: the first overlap row vanishes
    lab = SixJLabels(2, 2, 4, 2, 2, 4, 6)
    assert shelepin(lab).r(1, 1) == 0
    assert c_alpha(lab, "StretchedE").value == c_alpha(lab, "A").value
    # near stretched: the corner overlap is exactly 1
    lab2 = SixJLabels(2, 2, 2, 2, 2, 2, 6)
    assert shelepin(lab2).r(1, 1) == 1
    assert c_alpha(lab2, "NearStretchedE").value == c_alpha(lab2, "A").value


def test_select_method_choices():
    choice = select_method(SixJLabels(2, 2, 4, 2, 2, 4, 6))
    assert choice.method == "StretchedE"
    assert choice.predicted_terms == 1
    choice2 = select_method(SixJLabels(2, 2, 2, 2, 2, 2, 6))
    assert choice2.method == "NearStretchedE"
    assert choice2.predicted_terms == 2


def test_predicted_terms_bounds_actual():
    for six in admissible_sets(3)[::5]:
        lab = SixJLabels(*six, 6)
        choice = select_method(lab)
        got = c_alpha(choice.variant, choice.method)
        assert got.terms <= choice.predicted_terms, (six, choice)


def test_sixj_orbit_invariance():
    from sonsixj.labels import symmetry_orbit

    lab = SixJLabels(1, 3, 2, 3, 1, 4, 7)
    ref = sixj(lab, method="A").value
    for member in symmetry_orbit(lab):
        assert sixj(member, method="B", use_cache=False).value == ref


def test_odd_n_core_coefficients_are_rational():
    # the core coefficient stays rational at odd n; the assembled symbol may
    # still carry a surd from its normalization factors
    for six in [(2, 2, 2, 2, 2, 2), (1, 1, 2, 1, 1, 2), (2, 4, 2, 4, 2, 4)]:
        for n in (5, 7, 9):
            lab = SixJLabels(*six, n)
            for method in ("A", "C", "T3"):
                assert isinstance(c_alpha(lab, method).value, Fraction), (six, n)
    v = sixj(SixJLabels(2, 4, 2, 4, 2, 4, 5), use_cache=False).value
    assert v == surd_normalize(Fraction(1, 693), 91)


def test_n_guard():
    lab3 = SixJLabels(0, 0, 0, 0, 0, 0, 3)
    with pytest.raises(ValueError):
        sixj(lab3)
    assert sixj(lab3, allow_n3=True).value == SurdValue.of_rational(1)
    with pytest.raises(ValueError):
        sixj(SixJLabels(0, 0, 0, 0, 0, 0, 2), allow_n3=True)


def test_cache_round_trip():
    configure_cache(16)
    cache_clear()
    lab = SixJLabels(2, 2, 4, 4, 2, 2, 8)
    first = sixj(lab)
    second = sixj(lab)
    assert first.value == second.value
    assert second.method_used == first.method_used
    # orbit members share the cache slot and the value
    swapped = SixJLabels(2, 2, 4, 4, 2, 2, 8)._replace(a=4, d=2, b=2, c=2)
    uncached = sixj(lab, use_cache=False)
    assert uncached.value == first.value
    cache_clear()


def test_cache_disabled():
    configure_cache(0)
    try:
        lab = SixJLabels(2, 2, 2, 2, 2, 2, 6)
        assert sixj(lab).value == SurdValue.of_rational(Fraction(9, 400))
    finally:
        configure_cache(4096)
