# -*- coding: utf-8 -*-
import itertools
import json
import math
import random
from fractions import Fraction
from math import gcd

import pytest

from lib.common.errors import (
    InvalidParameters,
    InvalidTail,
    SemigroupJump,
    ShapeMismatch,
    TailAtOrBelowBase,
    TruncationExhausted,
    TruncationTooSmall,
    WeightMismatch,
)
from lib.common.rendering import dumps_canonical
from lib.deform import (
    DeformationCertifier,
    certify_stci,
    cor44_nonisomorphy_witness,
    default_truncation,
    lift_relations,
    load_parametrization,
    make_parametrization,
    one_form_valuation,
    value_semigroup,
)
from lib.deform.one_form import tail_one_form_valuation
from lib.deform.value_semigroup import EQUALS_GAMMA, EXCEEDS_GAMMA, UNDETERMINED
from lib.herzog import defining_equations, herzog_data
from lib.numsg import contains, gap_data, make_semigroup
from lib.poly import SparsePoly, substitute_param
from lib.stci import bresinsky_reduce


def monomial_data(S):
    H = herzog_data(S)
    E = defining_equations(S, H)
    return H, E, bresinsky_reduce(E, H)


def h1_triples(limit):
    result = []
    for gens in itertools.combinations(range(3, limit + 1), 3):
        if gcd(gcd(gens[0], gens[1]), gens[2]) != 1:
            continue
        if herzog_data(make_semigroup(*gens)).is_h1:
            result.append(gens)
    return result


class TestParametrization:
    def test_offsets_and_delta(self):
        P = make_parametrization(5, 7, 13, {"y": [[11, 1]]})
        assert P.offsets == (math.inf, 4, math.inf)
        assert P.delta == 4
        assert not P.is_monomial
        assert P.render() == "(t^5, t^7 + t^11, t^13)"

    def test_monomial(self):
        P = make_parametrization(5, 7, 13)
        assert P.is_monomial
        assert P.delta == math.inf

    def test_list_form_and_rational_coefficient(self):
        P = make_parametrization(5, 7, 13, [[], [[11, "1/2"], [16, 3]], [[16, -1]]])
        assert P.tails[1] == ((11, Fraction(1, 2)), (16, Fraction(3)))
        assert P.delta == 3

    def test_to_dict_is_serializable(self):
        data = json.loads(dumps_canonical(make_parametrization(5, 7, 13, {"y": [[11, 1]]})))
        assert data["tails"]["y"] == [[11, "1"]]
        assert data["offsets"] == ["inf", 4, "inf"]

    def test_tail_at_base(self):
        with pytest.raises(TailAtOrBelowBase):
            make_parametrization(5, 7, 13, {"y": [[7, 1]]})

    @pytest.mark.parametrize("tails", [
        {"y": [[11, 0]]},
        {"y": [[11, 0.5]]},
        {"w": [[11, 1]]},
        {"y": [[11, 1], [11, 2]]},
        {"y": [[11]]},
        {"y": [["11", 1]]},
        [[], []],
    ])
    def test_invalid_tail(self, tails):
        with pytest.raises(InvalidTail):
            make_parametrization(5, 7, 13, tails)

    def test_load(self, tmp_path):
        path = tmp_path / "curve.json"
        path.write_text(json.dumps({"l": 5, "m": 17, "n": 28, "tails": {"y": [[18, 1]]}}), encoding="utf-8")
        P = load_parametrization(path)
        assert P.weights == (5, 17, 28)
        assert P.delta == 1

    def test_load_bad_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(InvalidTail):
            load_parametrization(path)
        path.write_text(json.dumps({"l": 5, "m": 7}), encoding="utf-8")
        with pytest.raises(InvalidTail):
            load_parametrization(path)


class TestValueSemigroup:
    def test_non_flat_deformation_gains_46(self):
        P = make_parametrization(5, 17, 28, {"y": [[18, 1]]})
        result = value_semigroup(P, 60)
        assert result.verdict == EXCEEDS_GAMMA
        assert result.extra == (46,)
        assert result.basis_values[:4] == (5, 17, 28, 46)
        witness = result.witnesses[0]
        assert witness["value"] == 46
        assert witness["cancelled_value"] == 45
        assert witness["pair"] == [[0, 1, 1], [9, 0, 0]]
        assert witness["combination"] == "y*z - x^9"

    def test_admissible_tail_keeps_semigroup(self, s5713):
        P = make_parametrization(5, 7, 13, {"y": [[11, 1]]})
        result = value_semigroup(P, 45)
        assert result.equals_gamma
        assert result.extra == ()
        assert result.to_dict()["extra_values"] == []

    def test_monomial_values(self, s457):
        result = value_semigroup(make_parametrization(4, 5, 7), 30)
        assert result.verdict == EQUALS_GAMMA
        assert result.values == tuple(k for k in range(30) if contains(s457, k))

    def test_truncation_too_small(self):
        with pytest.raises(TruncationTooSmall):
            value_semigroup(make_parametrization(5, 7, 13), 17)

    def test_round_cap(self):
        P = make_parametrization(5, 17, 28, {"y": [[18, 1]]})
        result = value_semigroup(P, 60, max_rounds=1)
        assert result.verdict == UNDETERMINED
        assert result.reason


class TestLift:
    def test_y_tail(self, s5713):
        P = make_parametrization(5, 7, 13, {"y": [[11, 1]]})
        _, E, B = monomial_data(s5713)
        T = 60
        lift = lift_relations(E, P, T, k=B.k)
        f1_prime = lift.f_prime[0]
        assert f1_prime.terms[(2, 2, 0, 3)] == -1
        assert f1_prime.terms[(3, 0, 1, 7)] == 2
        assert all(margin >= 4 for margin in lift.ord_margins)
        assert lift.ord_margins[0] == 4
        assert lift.x_divisibility["f1"] >= 1
        assert lift.fallbacks == ()
        s = SparsePoly.variable("s", E.f1.weights)
        for f, f_prime, F, degree in zip(E.polys, lift.f_prime, lift.F, E.degrees):
            assert F == f - f_prime * s
            assert f_prime.degrees() == {degree + 1}
            assert substitute_param(F, P, T).is_zero()

    def test_monomial_lift_is_trivial(self, s5713):
        _, E, B = monomial_data(s5713)
        lift = lift_relations(E, make_parametrization(5, 7, 13), 40, k=B.k)
        assert all(p.is_zero() for p in lift.f_prime)
        assert lift.F == E.polys
        assert lift.ord_margins == (math.inf,) * 3

    def test_small_curve(self, s457):
        _, E, B = monomial_data(s457)
        P = make_parametrization(4, 5, 7, {"y": [[6, 1]]})
        lift = lift_relations(E, P, 40, k=B.k)
        assert all(margin >= 1 for margin in lift.ord_margins)

    def test_semigroup_jump(self, s51728):
        _, E, B = monomial_data(s51728)
        P = make_parametrization(5, 17, 28, {"y": [[18, 1]]})
        with pytest.raises(SemigroupJump) as info:
            lift_relations(E, P, 100, k=B.k)
        assert info.value.value == 46
        assert info.value.relation_index == 0

    def test_truncation_exhausted(self, s5713):
        _, E, B = monomial_data(s5713)
        P = make_parametrization(5, 7, 13, {"y": [[11, 1]]})
        with pytest.raises(TruncationExhausted):
            lift_relations(E, P, 20, k=B.k)


class TestOneForm:
    def test_valuation(self):
        P = make_parametrization(5, 7, 13, {"y": [[11, 1]]})
        assert one_form_valuation(P) == 16
        assert cor44_nonisomorphy_witness(P.semigroup, P)

    def test_valuation_in_semigroup(self):
        P = make_parametrization(5, 7, 13, {"y": [[12, 1]]})
        assert one_form_valuation(P) == 17
        assert not cor44_nonisomorphy_witness(P.semigroup, P)

    def test_tail_formula(self):
        assert tail_one_form_valuation(4, 5, 6) == 10
        assert tail_one_form_valuation(5, 7, 11, coeff=Fraction(-3, 2)) == 16
        with pytest.raises(ShapeMismatch):
            tail_one_form_valuation(5, 7, 7)

    @pytest.mark.parametrize("tails", [{}, {"x": [[6, 1]], "y": [[11, 1]]}, {"y": [[11, 1], [12, 1]]}])
    def test_shape_mismatch(self, tails):
        with pytest.raises(ShapeMismatch):
            one_form_valuation(make_parametrization(5, 7, 13, tails))


class TestCertificate:
    def test_certified_y_tail(self, stci_config):
        P = make_parametrization(5, 7, 13, {"y": [[11, 1]]})
        certificate = DeformationCertifier(stci_config).certify(P)
        assert certificate.certified
        assert (certificate.prop29.lhs, certificate.prop29.rhs) == (24, 22)
        assert (certificate.lemma21.lhs, certificate.lemma21.rhs) == (24, 17)
        assert certificate.prop29_pair[1].lhs == 24
        assert certificate.k == 1
        assert certificate.value_semigroup.equals_gamma
        assert certificate.lift is not None

    def test_default_truncation(self, s5713, monkeypatch):
        _, E, _ = monomial_data(s5713)
        assert default_truncation(s5713, E, 4) == 17 + 28 + 4 + 1
        assert default_truncation(s5713, E, 4, slack=8) == 17 + 28 + 4 + 8
        assert default_truncation(s5713, E, math.inf) == 17 + 28 + 1
        monkeypatch.setenv("STCI_TRUNC", "75")
        assert default_truncation(s5713, E, 4) == 75

    def test_default_truncation_covers_lift(self, stci_config):
        P = make_parametrization(14, 23, 27, {"x": [[69, 2], [74, 1]], "y": [[73, -1], [76, 1]], "z": [[81, 1]]})
        certificate = DeformationCertifier(stci_config).certify(P)
        T = certificate.truncation
        assert T == certificate.conductor + max(certificate.degrees) + certificate.delta + 1
        assert T > certificate.conductor
        assert all(T > d + certificate.delta for d in certificate.degrees)
        assert certificate.lift is not None
        assert certificate.value_semigroup.verdict == EQUALS_GAMMA

    def test_two_tails(self, stci_config):
        P = make_parametrization(5, 7, 13, {"y": [[11, 1], [16, 1]], "z": [[16, 1]]})
        certificate = DeformationCertifier(stci_config).certify(P)
        assert certificate.delta == 3
        assert certificate.certified
        assert certificate.value_semigroup.verdict == EQUALS_GAMMA
        assert all(margin >= 3 for margin in certificate.lift.ord_margins)

    def test_not_certified_records_jump(self, stci_config):
        P = make_parametrization(5, 17, 28, {"y": [[18, 1]]})
        certificate = DeformationCertifier(stci_config).certify(P)
        assert not certificate.certified
        assert (certificate.lemma21.lhs, certificate.lemma21.rhs) == (46, 47)
        assert certificate.value_semigroup.extra == (46,)
        assert certificate.lift is None
        assert certificate.lift_error == {"error": "SemigroupJump", "value": 46, "relation": 1}
        data = json.loads(dumps_canonical(certificate))
        assert data["verdict"] == "NotCertified"
        assert data["witnesses"]["lift_error"]["value"] == 46

    def test_monomial_is_certified(self, stci_config):
        certificate = DeformationCertifier(stci_config).certify(make_parametrization(4, 5, 7))
        assert certificate.certified
        assert certificate.delta == math.inf
        assert json.loads(dumps_canonical(certificate))["lemma21"]["lhs"] == "inf"

    def test_without_witnesses(self, stci_config):
        P = make_parametrization(5, 7, 13, {"y": [[11, 1]]})
        certificate = DeformationCertifier(stci_config).certify(P, witnesses=False)
        assert certificate.value_semigroup is None
        assert "witnesses" not in certificate.to_dict()

    def test_h2_rejected(self, stci_config):
        with pytest.raises(InvalidParameters):
            DeformationCertifier(stci_config).certify(make_parametrization(4, 6, 7))

    def test_weight_mismatch(self, s5713):
        H, E, B = monomial_data(s5713)
        with pytest.raises(WeightMismatch):
            certify_stci(s5713, H, E, B, make_parametrization(4, 5, 7), witnesses=False)

    def test_pair_form_matches_single_form(self):
        rng = random.Random(303)
        for gens in h1_triples(20)[:40]:
            S = make_semigroup(*gens)
            H, E, B = monomial_data(S)
            gamma = gap_data(S).conductor
            offset = rng.randint(1, gamma + 2)
            P = make_parametrization(*gens, {"x": [[gens[0] + offset, 1]]})
            certificate = certify_stci(S, H, E, B, P, witnesses=False)
            d1, d2, d3 = E.degrees
            rhs = gamma + B.k * gens[0]
            expected = min(d1, d3) + offset >= rhs and min(d1, d2, d3) + offset >= gamma
            assert certificate.certified == expected
            assert certificate.prop29.holds == (min(d1, d2 + B.k * gens[0], d3) + offset >= rhs)


def _random_tails(rng, gens, min_offset, max_offset):
    tails = {}
    names = ["x", "y", "z"]
    forced = rng.randrange(3)
    for index, name in enumerate(names):
        if index != forced and rng.random() < 0.5:
            continue
        offset = min_offset if index == forced else rng.randint(min_offset, max_offset)
        items = [[gens[index] + offset, rng.choice([-2, -1, 1, 3])]]
        if rng.random() < 0.3:
            items.append([gens[index] + offset + rng.randint(1, 4), 1])
        tails[name] = items
    return tails


@pytest.fixture(scope="module")
def triples_upto_30():
    return h1_triples(30)


def test_admissible_tails_keep_value_semigroup(triples_upto_30):
    rng = random.Random(101)
    triples = triples_upto_30
    for _ in range(200):
        gens = rng.choice(triples)
        S = make_semigroup(*gens)
        H, E, B = monomial_data(S)
        gamma = gap_data(S).conductor
        delta = max(1, gamma - min(E.degrees)) + rng.randint(0, 2)
        P = make_parametrization(*gens, _random_tails(rng, gens, delta, delta + 3))
        assert P.delta == delta
        T = gamma + max(E.degrees) + delta + 1
        result = value_semigroup(P, T)
        assert result.verdict == EQUALS_GAMMA
        lift = lift_relations(E, P, T, k=B.k)
        assert all(margin >= delta for margin in lift.ord_margins)


def test_semigroup_jumps_are_new_values(triples_upto_30):
    rng = random.Random(202)
    triples = triples_upto_30
    jumps = 0
    for _ in range(200):
        gens = rng.choice(triples)
        S = make_semigroup(*gens)
        H, E, B = monomial_data(S)
        gamma = gap_data(S).conductor
        P = make_parametrization(*gens, _random_tails(rng, gens, 1, gamma))
        T = default_truncation(S, E, P.delta)
        result = value_semigroup(P, T)
        try:
            lift_relations(E, P, T, k=B.k)
        except SemigroupJump as e:
            jumps += 1
            assert not contains(S, e.value)
            if result.verdict != UNDETERMINED:
                assert e.value in result.extra
    assert jumps > 0
