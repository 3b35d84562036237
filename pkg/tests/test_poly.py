# -*- coding: utf-8 -*-
import random
from fractions import Fraction

import pytest

from lib.common.errors import InternalInconsistency, ValuationOfZero, WeightMismatch, ZeroPolynomial
from lib.deform import make_parametrization
from lib.poly import PowerCache, SparsePoly, TruncSeries, poly_arith, series_arith, substitute_param

W = (4, 5, 7)


def mono(coeff=1, ex=0, ey=0, ez=0, es=0, weights=W):
    return SparsePoly.monomial(coeff, ex, ey, ez, es, weights=weights)


def random_poly(rng, weights=W, size=3):
    terms = {}
    for _ in range(size):
        exp = tuple(rng.randint(0, 2) for _ in range(3)) + (rng.randint(0, 1),)
        terms[exp] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    return SparsePoly(terms, weights)


class TestSparsePoly:
    def test_square(self):
        p = mono(ex=3) - mono(ey=1, ez=1)
        expected = mono(ex=6) - mono(2, ex=3, ey=1, ez=1) + mono(ey=2, ez=2)
        assert p ** 2 == expected
        assert p * p == poly_arith(p, p, "mul")

    def test_identities(self):
        p = mono(ex=3) - mono(ey=1, ez=1)
        assert (p * 0).is_zero()
        assert p * 1 == p
        assert p - p == SparsePoly.zero(W)
        assert p ** 0 == SparsePoly.constant(1, W)

    def test_cancellation_drops_terms(self):
        p = mono(ex=1) + mono(-1, ex=1)
        assert p.terms == {}

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatch):
            mono(ex=1) + mono(ex=1, weights=(5, 7, 13))

    def test_weighted_order_and_initial_part(self):
        p = mono(ex=1) + mono(ex=2)
        assert p.weighted_order() == 4
        assert p.initial_part() == mono(ex=1)
        assert not p.is_homogeneous()
        f1 = mono(ex=3) - mono(ey=1, ez=1)
        assert f1.weighted_order() == 12
        assert f1.is_homogeneous()

    def test_s_has_negative_weight(self):
        assert mono(ex=3, es=1).weighted_order() == 11

    def test_zero_has_no_order(self):
        with pytest.raises(ZeroPolynomial):
            SparsePoly.zero(W).weighted_order()

    def test_render(self):
        assert (mono(ex=3) - mono(ey=1, ez=1)).render() == "x^3 - y*z"
        assert mono(Fraction(-1, 2), ey=2, es=1).render() == "-1/2*y^2*s"
        assert SparsePoly.zero(W).render() == "0"

    def test_x_adic_order_and_division(self):
        p = mono(ex=2, ey=1) - mono(3, ex=5)
        assert p.x_adic_order() == 2
        assert p.divide_by_x(2) == mono(ey=1) - mono(3, ex=3)
        assert SparsePoly.zero(W).x_adic_order() is None

    def test_specialize_and_modulo(self):
        p = mono(2, ey=4, es=3) + mono(ex=1, ez=1, es=1)
        assert p.specialize_s(1) == mono(2, ey=4) + mono(ex=1, ez=1)
        assert p.modulo_xz() == mono(2, ey=4, es=3)

    def test_monomial_curve_image_of_kernel_element(self):
        assert (mono(ex=3) - mono(ey=1, ez=1)).monomial_curve_image() == {}
        image = (mono(ex=1) + mono(ex=2)).monomial_curve_image()
        initial = (mono(ex=1) + mono(ex=2)).initial_part().monomial_curve_image()
        assert image[min(image)] == initial[min(initial)]

    def test_ring_axioms_on_random_polys(self):
        rng = random.Random(7)
        for _ in range(25):
            p, q, r = (random_poly(rng) for _ in range(3))
            assert p * (q + r) == p * q + p * r
            assert (p * q) * r == p * (q * r)
            assert p + q == q + p
            assert p * q == q * p


class TestTruncSeries:
    def test_valuation_after_cancellation(self):
        u = TruncSeries({(45, 0): 1, (46, 0): 1}, 60) - TruncSeries.monomial(1, 45, 0, 60)
        assert u.valuation() == 46
        assert TruncSeries({(7, 0): 1, (9, 0): 3}, 20).valuation() == 7

    def test_valuation_of_zero(self):
        with pytest.raises(ValuationOfZero):
            TruncSeries({}, 10).valuation()

    def test_one_is_identity(self):
        u = TruncSeries({(3, 1): 2, (5, 0): -1}, 12)
        assert u * TruncSeries.one(12) == u

    def test_truncation_flag(self):
        assert TruncSeries({(5, 0): 1}, 5).truncated
        u = TruncSeries.monomial(1, 3, 0, 5)
        product = u * u
        assert product.is_zero()
        assert product.truncated

    def test_initial_symbol_and_coefficient(self):
        u = TruncSeries({(15, 1): -2, (15, 2): 3, (16, 2): -1}, 30)
        assert u.initial_symbol() == TruncSeries({(15, 1): -2, (15, 2): 3}, 30)
        assert u.leading_coefficient() == 1
        assert u.coefficient(16, 2) == -1
        assert u.coefficient(17) == 0

    def test_derivative(self):
        u = TruncSeries({(0, 0): 4, (5, 1): 2}, 10)
        assert u.derivative_t() == TruncSeries({(4, 1): 10}, 9)

    def test_series_arith(self):
        u = TruncSeries.monomial(2, 3, 0, 10)
        v = TruncSeries.monomial(1, 4, 1, 10)
        assert series_arith(u, v, "mul") == TruncSeries.monomial(2, 7, 1, 10)
        assert series_arith(u, None, "scale", factor=Fraction(1, 2)) == TruncSeries.monomial(1, 3, 0, 10)


class TestSubstitution:
    def test_kernel_vanishes_on_monomial_curve(self):
        P = make_parametrization(4, 5, 7)
        f1 = mono(ex=3) - mono(ey=1, ez=1)
        assert substitute_param(f1, P, 20).is_zero()

    def test_graded_substitution(self):
        P = make_parametrization(4, 5, 7, {"y": [[6, 1]]})
        f3 = mono(ez=2) - mono(ex=1, ey=2)
        image = substitute_param(f3, P, 20)
        assert image.coefficient(15, 1) == -2
        assert image.coefficient(16, 2) == -1
        assert image.graded_degrees() == {14}
        without_s = substitute_param(f3, P, 20, with_s=False)
        assert without_s == image.specialize_s(1)

    def test_monomial_series(self):
        P = make_parametrization(5, 7, 13, {"y": [[11, 1]]})
        series = PowerCache(P, 40, with_s=False).monomial((2, 2, 0))
        assert series == TruncSeries({(24, 0): 1, (28, 0): 2, (32, 0): 1}, 40)

    def test_substitution_is_multiplicative(self):
        rng = random.Random(11)
        P = make_parametrization(4, 5, 7, {"y": [[6, 2]], "z": [[9, -1]]})
        for _ in range(10):
            p, q = random_poly(rng), random_poly(rng)
            left = substitute_param(p * q, P, 30)
            right = substitute_param(p, P, 30) * substitute_param(q, P, 30)
            assert left == right

    def test_weight_mismatch(self):
        P = make_parametrization(5, 7, 13)
        with pytest.raises(WeightMismatch):
            substitute_param(mono(ex=1), P, 10)

    def test_shared_power_cache(self):
        P = make_parametrization(4, 5, 7, {"y": [[6, 2]], "z": [[9, -1]]})
        cache = PowerCache(P, 30)
        rng = random.Random(17)
        for _ in range(5):
            p = random_poly(rng)
            assert substitute_param(p, P, 30, cache=cache) == substitute_param(p, P, 30)
        first = cache.monomial((1, 2, 0, 1))
        assert cache.monomial((1, 2, 0, 1)) is first
        assert first == PowerCache(P, 30).monomial((1, 2, 0, 1))
        assert first == substitute_param(mono(ex=1, ey=2, es=1), P, 30)

    def test_power_cache_must_match(self):
        P = make_parametrization(4, 5, 7, {"y": [[6, 1]]})
        with pytest.raises(InternalInconsistency):
            substitute_param(mono(ex=1), P, 20, cache=PowerCache(P, 30))
        with pytest.raises(InternalInconsistency):
            substitute_param(mono(ex=1), P, 30, with_s=False, cache=PowerCache(P, 30))
