"""Exact arithmetic layer: gamma values, pochhammers, surds, factored products."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sonsixj.exact import (
    FactoredProduct,
    GammaExact,
    PoleError,
    RadicandMismatchError,
    ResidualSqrtPiError,
    SurdValue,
    binomial,
    factor_int,
    factorial,
    gamma_exact,
    gamma_ratio_product,
    poch_half,
    poch_int,
    pochhammer,
    squarefree_decompose,
    surd_normalize,
)


# ---------------------------------------------------------------------------
# gamma at half-integer arguments
# ---------------------------------------------------------------------------

def test_gamma_integer_values():
    assert gamma_exact(1) == GammaExact(Fraction(1), 0)
    assert gamma_exact(4) == GammaExact(Fraction(6), 0)
    assert gamma_exact(7) == GammaExact(Fraction(720), 0)


def test_gamma_half_integer_values():
    assert gamma_exact(Fraction(1, 2)) == GammaExact(Fraction(1), 1)
    assert gamma_exact(Fraction(7, 2)) == GammaExact(Fraction(15, 8), 1)
    assert gamma_exact(Fraction(-1, 2)) == GammaExact(Fraction(-2), 1)
    assert gamma_exact(Fraction(-3, 2)) == GammaExact(Fraction(4, 3), 1)


def test_gamma_pole_raises():
    with pytest.raises(PoleError):
        gamma_exact(0)
    with pytest.raises(PoleError):
        gamma_exact(-3)


def test_gamma_residual_sqrtpi_raises():
    with pytest.raises(ResidualSqrtPiError):
        gamma_exact(Fraction(1, 2)).to_rational()
    assert gamma_exact(3).to_rational() == 2


@given(st.integers(min_value=-19, max_value=19).filter(lambda m: m % 2 or m > 0))
def test_gamma_recurrence(m):
    # Gamma(x + 1) = x Gamma(x) away from the poles.
    x = Fraction(m, 2)
    lhs = gamma_exact(x + 1)
    rhs = gamma_exact(x) * x
    assert lhs == rhs


# ---------------------------------------------------------------------------
# pole pairing in gamma ratios
# ---------------------------------------------------------------------------

def test_gamma_ratio_pole_pair():
    # one numerator pole against one denominator pole: (-1)**(x-y) * y!/x!
    assert gamma_ratio_product([-2], [-4]).to_rational() == 12
    assert gamma_ratio_product([-4], [-2]).to_rational() == Fraction(1, 12)
    assert gamma_ratio_product([-1], [-2]) == GammaExact(Fraction(-2), 0)


def test_gamma_ratio_pole_surplus():
    # extra denominator pole kills the product; extra numerator pole is an error
    assert gamma_ratio_product([1], [-3]).is_zero()
    with pytest.raises(PoleError):
        gamma_ratio_product([-3], [1])


def test_gamma_ratio_pairing_independence():
    # two poles on each side: value must not depend on who pairs with whom
    v = gamma_ratio_product([-1, -4], [-2, -3]).to_rational()
    assert v == Fraction(1, 2)
    assert gamma_ratio_product([-4, -1], [-3, -2]).to_rational() == v


def test_gamma_ratio_mixed_regular_and_poles():
    v = gamma_ratio_product([Fraction(7, 2), -2], [Fraction(1, 2), -4])
    assert v.to_rational() == Fraction(15, 8) * 12


@given(
    st.integers(min_value=1, max_value=20),
    st.integers(min_value=0, max_value=10),
)
def test_pochhammer_as_gamma_ratio(m, k):
    a = Fraction(m, 2)
    assert gamma_ratio_product([a + k], [a]).to_rational() == pochhammer(a, k)


# ---------------------------------------------------------------------------
# pochhammer variants
# ---------------------------------------------------------------------------

def test_pochhammer_values():
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(5, 0) == 1
    assert pochhammer(-3, 5) == 0
    with pytest.raises(ValueError):
        pochhammer(1, -1)


def test_poch_int_values():
    assert poch_int(3, 4) == 360
    assert poch_int(-3, 2) == 6
    assert poch_int(-3, 3) == -6
    assert poch_int(-2, 5) == 0
    assert poch_int(-7, 0) == 1


@given(
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=0, max_value=8),
)
def test_poch_int_matches_generic(a, k):
    assert poch_int(a, k) == pochhammer(a, k)


@given(
    st.integers(min_value=-15, max_value=15).filter(lambda m: m % 2),
    st.integers(min_value=0, max_value=8),
)
def test_poch_half_matches_generic(m, k):
    assert poch_half(m, k) == pochhammer(Fraction(m, 2), k)


def test_factorial_and_binomial():
    assert factorial(0) == 1
    assert factorial(6) == 720
    assert binomial(10, 3) == 120
    assert binomial(4, 0) == 1
    with pytest.raises(ValueError):
        factorial(-1)


# ---------------------------------------------------------------------------
# integer factoring and squarefree normal form
# ---------------------------------------------------------------------------

def test_factor_int():
    assert factor_int(2**4 * 3**2 * 17) == {2: 4, 3: 2, 17: 1}
    assert factor_int(1) == {}
    # semiprime with factors beyond the sieve
    assert factor_int(1000003 * 1000033) == {1000003: 1, 1000033: 1}


@given(st.integers(min_value=1, max_value=100000))
def test_squarefree_decompose_property(n):
    s, q = squarefree_decompose(n)
    assert s * s * q == n
    assert all(e == 1 for e in factor_int(q).values())


def test_squarefree_decompose_values():
    assert squarefree_decompose(72) == (6, 2)
    assert squarefree_decompose(49) == (7, 1)
    assert squarefree_decompose(1) == (1, 1)


# ---------------------------------------------------------------------------
# surd normal form and arithmetic
# ---------------------------------------------------------------------------

def test_surd_normalize_values():
    v = surd_normalize(1, Fraction(8, 9))
    assert (v.coeff, v.radicand) == (Fraction(2, 3), Fraction(2))
    z = surd_normalize(0, 5)
    assert z.is_zero() and z.radicand == 1
    r = surd_normalize(Fraction(3, 4), 1)
    assert r.is_rational() and r.to_rational() == Fraction(3, 4)


@given(
    st.fractions(min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20),
    st.fractions(min_value=Fraction(1, 20), max_value=Fraction(50), max_denominator=20),
)
def test_surd_normalize_idempotent_and_square(c, r):
    v = surd_normalize(c, r)
    again = surd_normalize(v.coeff, v.radicand)
    assert (again.coeff, again.radicand) == (v.coeff, v.radicand)
    assert v.square() == c * c * r


def test_surd_multiplication_cross_radicand():
    assert surd_normalize(1, 2) * surd_normalize(1, 6) == surd_normalize(2, 3)
    assert surd_normalize(1, 2) * surd_normalize(1, 2) == SurdValue.of_rational(2)
    assert surd_normalize(2, 3) * 0 == SurdValue.zero()


def test_surd_division():
    assert surd_normalize(1, 2) / surd_normalize(1, 2) == SurdValue.of_rational(1)
    assert surd_normalize(3, 10) / surd_normalize(1, 5) == surd_normalize(3, 2)
    assert surd_normalize(1, 3) / 2 == surd_normalize(Fraction(1, 2), 3)


def test_surd_addition_same_radicand():
    assert surd_normalize(2, 3) + surd_normalize(1, 3) == surd_normalize(3, 3)
    assert surd_normalize(2, 3) - surd_normalize(2, 3) == SurdValue.zero()
    assert SurdValue.zero() + surd_normalize(1, 7) == surd_normalize(1, 7)


def test_surd_addition_mismatch_raises():
    with pytest.raises(RadicandMismatchError):
        surd_normalize(1, 2) + surd_normalize(1, 3)


def test_surd_sign_abs_str():
    v = surd_normalize(Fraction(-3, 2), 5)
    assert v.sign() == -1
    assert abs(v) == surd_normalize(Fraction(3, 2), 5)
    assert str(abs(v)) == "3/2*sqrt(5)"
    assert str(SurdValue.zero()) == "0"
    assert str(SurdValue.of_rational(Fraction(7, 2))) == "7/2"


# ---------------------------------------------------------------------------
# factored products
# ---------------------------------------------------------------------------

def test_factored_product_to_fraction():
    fp = FactoredProduct()
    fp.mul_factorial(5)
    fp.mul_int(7, 2)
    fp.mul_fraction(Fraction(3, 4))
    assert fp.to_fraction() == Fraction(120 * 49 * 3, 4)


def test_factored_product_sqrt_surd():
    fp = FactoredProduct()
    fp.mul_int(18)
    assert fp.sqrt_surd() == surd_normalize(3, 2)
    fp2 = FactoredProduct()
    fp2.mul_fraction(Fraction(9, 4))
    assert fp2.sqrt_surd() == SurdValue.of_rational(Fraction(3, 2))


def test_factored_product_factorial_ratio():
    fp = FactoredProduct()
    fp.mul_factorial(10)
    fp.mul_factorial(7, -1)
    assert fp.to_fraction() == 10 * 9 * 8
