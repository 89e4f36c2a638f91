import math
import random
from dataclasses import replace

import pytest
from gen import random_gm, random_pentaform, random_utility

from pentaform import (
    GmCondition,
    InvalidGameError,
    PentaformGame,
    QuintupleSet,
    RoundTrip,
    corpus,
    equality_battery,
    has_information_set_situations,
    information_set_rewrite,
    is_pentaform,
    node_set,
    pentaform_of,
    project,
    roundtrip_check,
    standardize,
    validate_gm,
    validate_pentaform_game,
)
from pentaform.game import derive, extended_real


def conditions(violations):
    return {v.axiom for v in violations}


class TestExtendedReal:
    def test_infinities(self):
        assert extended_real("inf") == math.inf and extended_real("-inf") == -math.inf
        assert extended_real(3) == 3.0

    @pytest.mark.parametrize("bad", [float("nan"), "nan", True, "7"])
    def test_rejects(self, bad):
        with pytest.raises((ValueError, TypeError)):
            extended_real(bad)


class TestValidateGm:
    def test_alex(self):
        g = corpus.alex_gm()
        assert validate_gm(g) == []
        d = derive(g)
        assert d.A == {"left", "right"} and d.I == {"Alex"}

    def test_repeated_label(self):
        g = corpus.alex_gm()
        bad = replace(g, labels={("0", "1"): "left", ("0", "2"): "left"})
        (v,) = validate_gm(bad)
        assert v.axiom is GmCondition.GM3

    def test_missing_control(self):
        g = corpus.alex_gm()
        assert GmCondition.GM5 in conditions(validate_gm(replace(g, control={})))

    def test_trivial_tree(self):
        g = replace(corpus.alex_gm(), nodes=frozenset({"0"}), edges=frozenset())
        assert GmCondition.GM1 in conditions(validate_gm(g))

    def test_bad_partition(self):
        g = replace(corpus.horse_gm(), info_sets=frozenset({node_set("0", "1"), node_set("1"), node_set("2", "3")}))
        assert GmCondition.GM2 in conditions(validate_gm(g))

    def test_feasible_sets_differ(self):
        g = corpus.horse_gm()
        labels = dict(g.labels)
        labels[("3", "7")] = "x"
        assert GmCondition.GM4 in conditions(validate_gm(replace(g, labels=labels)))

    def test_players_differ_in_information_set(self):
        g = corpus.horse_gm()
        control = dict(g.control, **{"3": "Dog"})
        assert GmCondition.GM5 in conditions(validate_gm(replace(g, control=control)))

    def test_utility_domain(self):
        g = corpus.alex_gm()
        assert GmCondition.GM6 in conditions(validate_gm(replace(g, u={"Alex": {frozenset({"0", "1"}): 1.0}})))
        assert GmCondition.GM6 in conditions(validate_gm(replace(g, u={})))


class TestOperators:
    def test_alex_to_pentaform(self):
        pg = pentaform_of(corpus.alex_gm())
        assert pg == corpus.alex_game()
        assert ("Alex", {"0"}, "0", "right", "2") in pg.q

    def test_horse_to_pentaform(self):
        pg = pentaform_of(corpus.horse_gm())
        assert pg.q == corpus.horse()
        assert set(project(pg.q, "J").values()) == {node_set("0"), node_set("1"), node_set("2", "3")}

    def test_standardize_named(self):
        g = standardize(corpus.horse_named_game())
        assert g.info_sets == {node_set("0"), node_set("1"), node_set("2", "3")}

    def test_standardize_singleton(self):
        q = QuintupleSet([("i", "j", "w", "a", "y")])
        g = standardize(PentaformGame(q, {"i": {frozenset({"w", "y"}): 0.0}}))
        assert g.nodes == {"w", "y"} and g.edges == {("w", "y")}
        assert validate_gm(g) == []

    def test_invalid_inputs_raise(self):
        with pytest.raises(InvalidGameError):
            pentaform_of(replace(corpus.alex_gm(), control={}))
        with pytest.raises(InvalidGameError):
            standardize(PentaformGame(corpus.two_roots(), {}))
        with pytest.raises(InvalidGameError):
            standardize(PentaformGame(corpus.alex(), {"Bob": {}}))

    def test_utility_object_passes_through(self):
        g = corpus.horse_gm()
        pg = pentaform_of(g)
        assert pg.u is g.u and standardize(pg).u is g.u

    def test_information_set_situations(self):
        assert has_information_set_situations(corpus.horse())
        assert not has_information_set_situations(corpus.horse_named())
        assert has_information_set_situations(QuintupleSet())


class TestRoundTrip:
    def test_alex(self):
        r = roundtrip_check(corpus.alex_gm())
        assert r.direction == "SP" and r.status is RoundTrip.IDENTITY and r.ok

    def test_horse_game(self):
        assert roundtrip_check(corpus.horse_game()).status is RoundTrip.IDENTITY

    def test_named_game_is_rewritten(self):
        r = roundtrip_check(corpus.horse_named_game())
        assert r.status is RoundTrip.REWRITTEN and not r.ok
        assert r.image.q == corpus.horse()
        assert r.image.u == corpus.horse_utility()

    def test_rewrite_helper(self):
        assert information_set_rewrite(corpus.horse_named()) == corpus.horse()


class TestBattery:
    @pytest.mark.parametrize("make", [corpus.alex_gm, corpus.horse_gm])
    def test_all_pass(self, make):
        result = equality_battery(make())
        assert len(result) == 16 and all(result.values())
        assert list(result)[0].startswith("a_") and list(result)[-1].startswith("p_")

    def test_situations_equal_information_sets(self):
        g = corpus.horse_gm()
        assert set(project(pentaform_of(g).q, "J").values()) == g.info_sets


def test_p_lands_in_information_set_pentaforms():
    rng = random.Random(31)
    for _ in range(300):
        g = random_gm(rng, 32)
        pg = pentaform_of(g)
        assert is_pentaform(pg.q) and has_information_set_situations(pg.q)
        assert validate_pentaform_game(pg) == []
        assert roundtrip_check(g).ok
        assert all(equality_battery(g).values())


def test_s_lands_in_gm_games():
    rng = random.Random(32)
    for _ in range(300):
        q = random_pentaform(rng, 32)
        u = random_utility(rng, {r.i for r in q}, project(q, "WY").tuples)
        pg = PentaformGame(q, u)
        g = standardize(pg)
        assert validate_gm(g) == []
        r = roundtrip_check(pg)
        if has_information_set_situations(q):
            assert r.status is RoundTrip.IDENTITY
        else:
            assert r.status is RoundTrip.REWRITTEN
            assert r.image.q == information_set_rewrite(q)
        # the battery holds on S-images of information-set games
        if has_information_set_situations(q):
            assert all(equality_battery(g).values())
