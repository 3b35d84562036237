# -*- coding: utf-8 -*-
import random
from math import gcd

import pytest

from lib.common.errors import NotMember, NotNumerical, StciError, ZeroGenerator
from lib.numsg import apery_set, contains, factorize, gap_data, in_two_generated, make_semigroup


def brute_members(gens, upto):
    members = set()
    ell, m, n = gens
    for i in range(upto // ell + 1):
        for j in range(upto // m + 1):
            for k in range(upto // n + 1):
                value = i * ell + j * m + k * n
                if value <= upto:
                    members.add(value)
    return members


class TestMakeSemigroup:
    def test_records_gcd_of_first_pair(self):
        S = make_semigroup(4, 6, 7)
        assert S.generators == (4, 6, 7)
        assert S.d == 2

    def test_not_numerical(self):
        with pytest.raises(NotNumerical):
            make_semigroup(2, 4, 6)

    @pytest.mark.parametrize("gens", [(0, 5, 7), (4, -5, 7), (4, 5, 0)])
    def test_zero_generator(self, gens):
        with pytest.raises(ZeroGenerator):
            make_semigroup(*gens)

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            make_semigroup(6, 10, 15 * 2)
        assert issubclass(NotNumerical, StciError)


class TestMembership:
    @pytest.mark.parametrize("k,expected", [
        (0, True), (1, False), (4, False), (5, True), (11, False), (12, True),
        (16, False), (17, True), (-3, False),
    ])
    def test_contains(self, s5713, k, expected):
        assert contains(s5713, k) is expected

    def test_in_two_generated_orders_by_first_coefficient(self):
        assert in_two_generated(30, 6, 10) == [(0, 3), (5, 0)]
        assert in_two_generated(7, 2, 4) == []


class TestGapData:
    @pytest.mark.parametrize("gens,gaps,conductor", [
        ((4, 5, 7), (1, 2, 3, 6), 7),
        ((5, 7, 13), (1, 2, 3, 4, 6, 8, 9, 11, 16), 17),
        ((4, 7, 9), (1, 2, 3, 5, 6, 10), 11),
    ])
    def test_known_conductors(self, gens, gaps, conductor):
        data = gap_data(make_semigroup(*gens))
        assert data.gaps == gaps
        assert data.conductor == conductor
        assert data.frobenius == conductor - 1

    def test_conductor_of_large_family_member(self, s51728):
        data = gap_data(s51728)
        assert data.conductor == 47
        assert 46 in data.gaps

    def test_whole_naturals(self):
        data = gap_data(make_semigroup(1, 2, 3))
        assert data.gaps == ()
        assert data.frobenius == -1
        assert data.conductor == 0

    def test_no_coprime_pair(self):
        # gcd 两两大于 1
        data = gap_data(make_semigroup(6, 10, 15))
        members = brute_members((6, 10, 15), data.conductor + 6)
        assert all(k in members for k in range(data.conductor, data.conductor + 6))
        assert data.frobenius not in members


class TestApery:
    def test_small(self, s457):
        assert apery_set(s457, 4) == [0, 5, 10, 7]

    def test_conductor_from_apery(self, s5713):
        apery = apery_set(s5713, 5)
        assert apery == [0, 21, 7, 13, 14]
        assert max(apery) - 5 + 1 == gap_data(s5713).conductor

    @pytest.mark.parametrize("w", [0, 3, 16])
    def test_not_member(self, s5713, w):
        with pytest.raises(NotMember):
            apery_set(s5713, w)


class TestFactorize:
    @pytest.mark.parametrize("k,min_x,expected", [
        (24, 1, (2, 2, 0)),
        (28, 1, (3, 0, 1)),
        (28, 0, (0, 4, 0)),
        (32, 1, (5, 1, 0)),
        (16, 0, None),
        (0, 0, (0, 0, 0)),
        (7, 1, None),
    ])
    def test_examples(self, s5713, k, min_x, expected):
        assert factorize(s5713, k, min_x=min_x) == expected

    def test_negative(self, s5713):
        assert factorize(s5713, -1) is None


def test_random_semigroups_match_brute_force():
    rng = random.Random(20240601)
    checked = 0
    while checked < 40:
        gens = sorted(rng.sample(range(3, 30), 3))
        if gcd(gcd(*gens[:2]), gens[2]) != 1:
            continue
        S = make_semigroup(*gens)
        data = gap_data(S)
        upto = data.conductor + gens[0] + 5
        members = brute_members(gens, upto)
        assert set(data.gaps) == set(range(upto + 1)) - members
        for k in range(upto + 1):
            assert contains(S, k) == (k in members)
            exps = factorize(S, k)
            if k in members:
                assert sum(e * g for e, g in zip(exps, gens)) == k
            else:
                assert exps is None
        apery = apery_set(S, gens[0])
        assert max(apery) - gens[0] + 1 == data.conductor
        checked += 1
