from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zigzag.exact import E, EulerPoly, euler_numbers, umbral_eval
from zigzag.useries import (
    ESeries,
    QPoly,
    lift_to_q,
    parity_part,
    sec_plus_tan_integer_coefficients,
    substitute_qt,
    umbral_coefficients,
)


def _t(order=12):
    return ESeries.from_terms({1: 1}, order)


def test_sec_plus_tan_matches_boustrophedon():
    coeffs = sec_plus_tan_integer_coefficients(12)
    assert coeffs == euler_numbers(12)


def test_from_terms_rejects_out_of_order_exponent():
    with pytest.raises(ValueError):
        ESeries.from_terms({3: 1}, 2)


def test_exp_log_roundtrip():
    s = ESeries.from_terms({1: E, 2: Fraction(1, 3)}, 10)
    assert s.exp().log() == s


def test_sqrt_squares_back():
    s = ESeries.from_terms({0: 1, 2: 1}, 12)
    r = s.sqrt()
    assert r * r == s


def test_arctan_odd_series():
    a = _t(9).arctan()
    # arctan t = t - t^3/3 + t^5/5 - t^7/7 + ...
    assert a.coefficient(1) == 1
    assert a.coefficient(3) == Fraction(-1, 3)
    assert a.coefficient(5) == Fraction(1, 5)
    assert a.coefficient(2) == 0
    assert a.coefficient(7) == Fraction(-1, 7)


def test_sinh_cosh_split_exp():
    s = ESeries.from_terms({1: E}, 8)
    assert s.sinh() + s.cosh() == s.exp()
    assert s.sinh() == parity_part(s.exp(), "odd")


def test_parity_parts_partition_series():
    s = ESeries.from_terms({0: 1, 1: E, 2: E**2, 3: Fraction(1, 2)}, 6)
    assert parity_part(s, "even") + parity_part(s, "odd") == s
    assert parity_part(s, "odd").coefficient(2).is_zero()


def test_geometric_via_pow():
    # 1/(1 - t) as a binomial power
    s = (ESeries.from_terms({0: 1, 1: -1}, 8)).pow(-1)
    assert all(s.coefficient(i) == 1 for i in range(9))


def test_umbral_coefficients():
    s = ESeries.from_terms({0: 1, 1: E, 2: E**2}, 2)
    assert umbral_coefficients(s) == [Fraction(1), Fraction(1), Fraction(1)]


def test_umbral_identity_sinh_arctan():
    # The package-wide umbral workhorse: sinh(E arctan t) evaluates to t.
    s = _t(14).arctan()
    poly_series = ESeries.from_terms({1: E}, 14)
    composed = (poly_series * 0 + s.scale(E)).sinh()
    values = umbral_coefficients(composed)
    assert values[1] == 1
    assert all(v == 0 for i, v in enumerate(values) if i != 1)


def test_qpoly_basics():
    p = QPoly.const(3) + QPoly.q_power(2)
    assert p.coefficient(0) == 3
    assert p.coefficient(2) == 1
    assert not p.is_zero()
    assert p.degree == 2


def test_lift_and_substitute_agree_at_q_one():
    s = ESeries.from_terms({0: 1, 1: E, 2: E**2, 3: E}, 6)
    lifted = lift_to_q(s)
    subbed = substitute_qt(s)
    for i in range(7):
        a = lifted.coefficient(i)
        b = subbed.coefficient(i)
        # both specialize back to the original coefficient at q = 1
        assert sum(a.coeffs, EulerPoly()) == s.coefficient(i)
        assert sum(b.coeffs, EulerPoly()) == s.coefficient(i)


@settings(max_examples=40)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5),
       st.lists(st.integers(-6, 6), min_size=1, max_size=5))
def test_multiplication_commutes(a_coeffs, b_coeffs):
    order = 8
    a = ESeries.from_terms({i: c for i, c in enumerate(a_coeffs)}, order)
    b = ESeries.from_terms({i: c for i, c in enumerate(b_coeffs)}, order)
    assert a * b == b * a


@settings(max_examples=40)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_exp_of_sum_is_product(coeffs):
    order = 8
    # force zero constant term so exp is defined
    terms = {i + 1: c for i, c in enumerate(coeffs)}
    s = ESeries.from_terms(terms, order)
    assert (s + s).exp() == s.exp() * s.exp()
