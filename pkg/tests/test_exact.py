from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zigzag.exact import (
    E,
    EulerPoly,
    derangement_numbers,
    euler_number,
    euler_numbers,
    umbral_eval,
    umbral_eval_int,
)

EULER_TABLE = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]


def test_euler_numbers_known():
    assert euler_numbers(10) == EULER_TABLE
    assert euler_number(12) == 2702765


def test_euler_numbers_prefix_stability():
    assert euler_numbers(30)[:11] == EULER_TABLE


def test_derangement_numbers_known():
    assert derangement_numbers(8) == [1, 0, 1, 2, 9, 44, 265, 1854, 14833]


def test_derangement_recurrence():
    d = derangement_numbers(12)
    for n in range(2, 13):
        assert d[n] == (n - 1) * (d[n - 1] + d[n - 2])


def test_polynomial_arithmetic():
    p = (E**2 - 1) ** 2
    assert p == E**4 - 2 * E**2 + 1
    assert p.degree == 4
    assert (p - p).is_zero()


def test_umbral_eval_basics():
    # (E^2 - 1)^2 expands before E^k -> E_k, so the value is
    # E_4 - 2 E_2 + 1 = 5 - 2 + 1 = 4, not (E_2 - 1)^2 = 0.
    assert umbral_eval((E**2 - 1) ** 2) == 4
    assert umbral_eval(E**0) == 1
    assert umbral_eval(3 * E**5 - E) == 3 * 16 - 1


def test_umbral_eval_is_not_multiplicative():
    f = g = E**2
    assert umbral_eval(f * g) == 5  # E_4
    assert umbral_eval(f) * umbral_eval(g) == 1


def test_umbral_eval_int_rejects_fractions():
    half = EulerPoly.const(Fraction(1, 2))
    assert umbral_eval(half) == Fraction(1, 2)
    with pytest.raises(ValueError):
        umbral_eval_int(half)


@given(st.integers(-20, 20), st.integers(-20, 20),
       st.integers(0, 8), st.integers(0, 8))
def test_umbral_eval_linear(a, b, i, j):
    f = Fraction(a) * E**i
    g = Fraction(b) * E**j
    assert umbral_eval(f + g) == umbral_eval(f) + umbral_eval(g)


@given(st.lists(st.integers(-9, 9), max_size=7))
def test_scaling_commutes_with_umbral_eval(coeffs):
    poly = EulerPoly(coeffs)
    assert umbral_eval(poly * 7) == 7 * umbral_eval(poly)
