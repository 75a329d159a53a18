import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidinv.algebra import (
    BiLaurent,
    LaurentPoly,
    RationalPoly,
    TruncatedSeries,
    VariableMismatch,
    exp_substitute,
    laurent_mul,
    symmetric_pair,
)


def lp(terms, var="a"):
    return LaurentPoly(terms, var)


class TestLaurentPoly:
    def test_difference_of_squares(self):
        p = lp({1: 1, -1: 1})
        q = lp({1: 1, -1: -1})
        assert laurent_mul(p, q) == lp({2: 1, -2: -1})

    def test_zero_annihilates(self):
        p = lp({3: 2, -1: 5})
        assert laurent_mul(p, LaurentPoly.zero("a")).is_zero

    def test_binomial_square(self):
        p = lp({-1: 1, 1: -1})
        assert p * p == lp({-2: 1, 0: -2, 2: 1})

    def test_variable_mismatch(self):
        with pytest.raises(VariableMismatch):
            laurent_mul(lp({0: 1}, "a"), lp({0: 1}, "x"))

    def test_no_zero_coefficients_stored(self):
        p = lp({1: 1}) - lp({1: 1})
        assert p.terms == {}
        assert p.is_zero

    def test_substitute_inverse_and_eval(self):
        p = lp({2: 3, -1: 1})
        assert p.substitute_inverse() == lp({-2: 3, 1: 1})
        assert p.evaluate_at_one() == 4

    def test_render_ascending_with_signs(self):
        p = LaurentPoly({-3: -1, -1: 1, 1: 1, 3: -1}, "x")
        assert str(p) == "-x^-3 + x^-1 + x - x^3"
        assert str(LaurentPoly.zero("x")) == "0"
        assert str(LaurentPoly({0: 3}, "x")) == "3"

    def test_json_round_trip(self):
        p = LaurentPoly({-2: 1, 0: -2, 2: 1}, "x")
        back = LaurentPoly({int(k): v for k, v in p.to_json().items()}, "x")
        assert back == p


def random_laurent(rng, var="a", max_terms=4, span=6, size=5):
    return LaurentPoly(
        {rng.randint(-span, span): rng.randint(-size, size) for _ in range(rng.randint(0, max_terms))},
        var,
    )


def random_bilaurent(rng, max_terms=4, span=4, size=5):
    return BiLaurent(
        {
            (rng.randint(-span, span), rng.randint(0, span)): rng.randint(-size, size)
            for _ in range(rng.randint(0, max_terms))
        }
    )


def test_ring_axioms_laurent_randomized():
    rng = random.Random(20260810)
    for _ in range(1000):
        p, q, r = (random_laurent(rng) for _ in range(3))
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + q == q + p
        assert p * q == q * p


def test_ring_axioms_bilaurent_randomized():
    rng = random.Random(99)
    for _ in range(1000):
        p, q, r = (random_bilaurent(rng) for _ in range(3))
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


@settings(max_examples=200, deadline=None)
@given(
    st.dictionaries(st.integers(-5, 5), st.integers(-6, 6), max_size=5),
    st.dictionaries(st.integers(-5, 5), st.integers(-6, 6), max_size=5),
)
def test_multiplication_commutes_hypothesis(t1, t2):
    p, q = lp(t1), lp(t2)
    assert p * q == q * p


class TestExpSubstitute:
    def test_loop_value_to_order_two(self):
        d = BiLaurent({(2, 0): -1, (-2, 0): -1})
        series = exp_substitute(d, 2)
        assert series.coefficient(0) == RationalPoly({0: -2})
        assert series.coefficient(1).is_zero
        assert series.coefficient(2) == RationalPoly({0: -4})

    def test_cube_to_order_one(self):
        series = exp_substitute(BiLaurent({(3, 0): 1}), 1)
        assert series.coefficient(0) == RationalPoly({0: 1})
        assert series.coefficient(1) == RationalPoly({0: 3})

    def test_power_coefficient_three_to_order_one(self):
        p3 = BiLaurent({(1, 0): 1, (-3, 0): -1, (-7, 0): 1})
        series = exp_substitute(p3, 1)
        assert series.coefficient(0) == RationalPoly({0: 1})
        assert series.coefficient(1) == RationalPoly({0: -3})

    def test_rational_coefficients_appear(self):
        series = exp_substitute(BiLaurent({(1, 0): 1}), 3)
        assert series.coefficient(3) == RationalPoly({0: Fraction(1, 6)})

    def test_x_passes_through(self):
        series = exp_substitute(BiLaurent({(2, 3): 5}), 1)
        assert series.coefficient(0) == RationalPoly({3: 5})
        assert series.coefficient(1) == RationalPoly({3: 10})

    def test_homomorphism_up_to_truncation(self):
        rng = random.Random(7)
        for _ in range(300):
            p, q = random_bilaurent(rng), random_bilaurent(rng)
            K = rng.randint(0, 4)
            assert exp_substitute(p * q, K) == exp_substitute(p, K) * exp_substitute(
                q, K
            )


class TestSymmetricPair:
    def test_middle(self):
        assert symmetric_pair(3, 5) == LaurentPoly({1: 1, -1: 1}, "x")

    def test_degenerate_double(self):
        assert symmetric_pair(2, 4) == LaurentPoly({0: 2}, "x")

    def test_low(self):
        assert symmetric_pair(2, 5) == LaurentPoly({-1: 1, 1: 1}, "x")

    def test_reflection_invariance(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(2, 12)
            m = rng.randint(1, n - 1)
            assert symmetric_pair(m, n) == symmetric_pair(n - m, n)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            symmetric_pair(0, 4)
        with pytest.raises(ValueError):
            symmetric_pair(4, 4)


class TestTruncatedSeries:
    def test_truncation_semantics(self):
        a = TruncatedSeries(2, [RationalPoly({0: 1}), RationalPoly({0: 1})])
        b = TruncatedSeries(2, [RationalPoly({0: 1}), RationalPoly({0: -1})])
        prod = a * b
        assert prod.coefficient(0) == RationalPoly({0: 1})
        assert prod.coefficient(1).is_zero
        assert prod.coefficient(2) == RationalPoly({0: -1})
        assert prod.coefficient(5).is_zero
