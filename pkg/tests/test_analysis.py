import itertools
import random

import pytest
from gen import random_pentaform

from pentaform import (
    AxiomId,
    ChainError,
    NotASubrootError,
    QuintupleSet,
    Separation,
    SeparationError,
    UnknownNodeError,
    check_axiom,
    check_no_absentmindedness,
    check_perfect_recall,
    corpus,
    is_pentaform,
    quintuple_of_successor,
    root,
    separation,
    slice_partition,
    subgame,
    subroots,
    union_chain,
    union_family,
    union_pair,
    validate,
    weakly_after,
)
from pentaform.analysis import slice_union_closed
from pentaform.relation import end_nodes, start_nodes


def rows_at(q, *ws):
    return QuintupleSet(r for r in q if r.w in ws)


def path_before(q):
    """Strict precedence among nodes by repeated edge composition."""
    edges = {(r.w, r.y) for r in q}
    closure = set(edges)
    while True:
        extra = {(a, d) for a, b in closure for c, d in edges if b == c} - closure
        if not extra:
            return closure
        closure |= extra


def subroots_oracle(q):
    """Subroots straight from the definition, with precedence from edge closure."""
    before = path_before(q)
    out = set()
    for t in {r.w for r in q}:
        tq = {r for r in q if r.w == t or (t, r.w) in before}
        inside = {r.j for r in tq}
        outside = {r.j for r in q if r not in tq}
        if not inside & outside:
            out.add(t)
    return out


def subroots_by_slices(q):
    """Subroots as nodes whose subtree is a union of slices."""
    before = path_before(q)
    slices = [s.rows for s in slice_partition(q).values()]
    out = set()
    for t in {r.w for r in q}:
        tq = {r for r in q if r.w == t or (t, r.w) in before}
        for k in range(len(slices) + 1):
            if any(set().union(*combo) == tq for combo in itertools.combinations(slices, k)):
                out.add(t)
                break
    return out


def recall_oracle(q):
    """Perfect recall straight from the quantified definition."""
    before = path_before(q)
    row = {r.y: r for r in q}
    ys = list(row)
    for y1, y2, y3 in itertools.product(ys, repeat=3):
        if (y1, y2) in before and row[y1].i == row[y2].i and row[y2].j == row[y3].j:
            if not any(
                (y4, y3) in before and row[y4].j == row[y1].j and row[y4].a == row[y1].a for y4 in ys
            ):
                return False
    return True


def absentminded_oracle(q):
    before = path_before(q)
    row = {r.y: r for r in q}
    return any((a, b) in before and row[a].j == row[b].j for a in row for b in row)


class TestWeaklyAfter:
    def test_root(self, q_tdot):
        assert weakly_after(q_tdot, "0") == q_tdot

    def test_node_one(self, q_tdot):
        assert weakly_after(q_tdot, "1") == rows_at(q_tdot, "1", "3")

    def test_node_two(self, q_tdot):
        assert weakly_after(q_tdot, "2") == rows_at(q_tdot, "2")

    def test_unknown(self, q_tdot):
        with pytest.raises(UnknownNodeError):
            weakly_after(q_tdot, "8")


class TestSubroots:
    def test_horse(self, q_tdot):
        assert subroots(q_tdot) == {"0"}

    def test_chain(self):
        assert subroots(corpus.chain()) == {"0", "1"}

    def test_three_layers(self):
        q = union_pair(corpus.horse_named(), corpus.guilty() | corpus.innocent()).q
        assert subroots(q) == subroots_oracle(q)

    def test_subgame_at_root(self):
        for q in (corpus.alex(), corpus.horse(), corpus.horse_named(), corpus.chain()):
            assert subgame(q, root(q)) == q

    def test_subgame_chain(self):
        sub = subgame(corpus.chain(), "1")
        assert sub == QuintupleSet([("i", "j2", "1", "a", "2")])
        assert is_pentaform(sub) and root(sub) == "1"

    def test_not_a_subroot(self, q_tdot):
        with pytest.raises(NotASubrootError):
            subgame(q_tdot, "2")


class TestSuccessorRows:
    def test_named(self, q_tdot):
        assert quintuple_of_successor(q_tdot, "7") == ("Teacher", "tomorrow", "3", "f", "7")

    def test_alex(self, q_dot):
        assert quintuple_of_successor(q_dot, "2") == ("Alex", frozenset({"0"}), "0", "right", "2")

    def test_root_is_not_a_successor(self, q_dot):
        with pytest.raises(UnknownNodeError):
            quintuple_of_successor(q_dot, "0")


class TestSeparation:
    def test_three_blocks_weak(self, q_tdot):
        assert separation([q_tdot, corpus.guilty(), corpus.innocent()]).level is Separation.WEAK

    def test_two_blocks_strong(self):
        v = separation([corpus.guilty(), corpus.innocent()])
        assert v.level is Separation.STRONG and v.strong and v.weak and not v.overlaps

    def test_same_set_twice(self, q_dot):
        v = separation([q_dot, q_dot])
        assert v.level is Separation.NONE
        assert v.overlaps[0].situations == {frozenset({"0"})}


class TestUnions:
    def test_pair(self, q_tdot):
        res = union_pair(q_tdot, corpus.guilty())
        assert res.start_nodes == {"0"} and is_pentaform(res.q) and root(res.q) == "0"

    def test_pair_with_information_set_horse(self, q_ddot):
        assert root(union_pair(q_ddot, corpus.guilty()).q) == "0"

    def test_three_blocks(self, q_tdot):
        res = union_pair(q_tdot, corpus.guilty() | corpus.innocent())
        assert is_pentaform(res.q) and root(res.q) == "0"

    def test_empty_is_neutral(self, q_dot):
        res = union_pair(QuintupleSet(), q_dot)
        assert res.q == q_dot
        assert res.start_nodes == start_nodes(q_dot) and res.end_nodes == end_nodes(q_dot)

    def test_family(self):
        res = union_family([corpus.guilty(), corpus.innocent()])
        assert res.start_nodes == {"4", "5", "6", "7"}
        assert res.end_nodes == {str(k) for k in range(11, 19)}

    def test_family_singleton(self, q_dot):
        assert union_family([q_dot]).q == q_dot

    def test_family_rejects_weak(self, q_tdot):
        with pytest.raises(SeparationError) as info:
            union_family([q_tdot, corpus.guilty()])
        assert info.value.verdict.level is Separation.WEAK
        assert info.value.verdict.overlaps[0].nodes == {"4", "5"}

    def test_pair_rejects_backwards(self, q_tdot):
        with pytest.raises(SeparationError):
            union_pair(corpus.guilty(), q_tdot)

    def test_pair_rejects_non_block(self, q_dot):
        with pytest.raises(SeparationError):
            union_pair(corpus.single_failures()["[Pwa]"], q_dot)

    def test_chain_constant(self, q_dot):
        assert union_chain([q_dot, q_dot]) == q_dot

    def test_chain_layers(self, q_tdot):
        first = union_pair(q_tdot, corpus.guilty()).q
        second = union_pair(first, corpus.innocent()).q
        out = union_chain([first, second])
        assert out == second and root(out) == "0"

    def test_chain_not_nested(self, q_dot, q_tdot):
        with pytest.raises(ChainError) as info:
            union_chain([q_dot, q_tdot])
        assert info.value.index == 1

    def test_chain_root_drift(self):
        a = QuintupleSet([("i", "j1", "1", "a", "2")])
        b = a | QuintupleSet([("i", "j0", "0", "a", "1")])
        with pytest.raises(ChainError):
            union_chain([a, b])


class TestRecall:
    def test_merged_player(self):
        w = check_perfect_recall(corpus.kid_teacher())
        assert (w.y1, w.y2, w.y3) == ("2", "4", "6")
        assert not recall_oracle(corpus.kid_teacher())

    def test_witness_reverifies(self):
        q = corpus.kid_teacher()
        y1, y2, y3 = check_perfect_recall(q)
        row = {r.y: r for r in q}
        before = path_before(q)
        assert (y1, y2) in before and row[y1].i == row[y2].i and row[y2].j == row[y3].j
        assert not any((y4, y3) in before and row[y4].j == row[y1].j and row[y4].a == row[y1].a for y4 in row)

    def test_horse(self, q_tdot):
        assert check_perfect_recall(q_tdot) is None and recall_oracle(q_tdot)
        assert check_no_absentmindedness(q_tdot) is None

    def test_singleton(self):
        q = QuintupleSet([("i", "j", "w", "a", "y")])
        assert check_perfect_recall(q) is None and check_no_absentmindedness(q) is None

    def test_absentminded(self):
        q = QuintupleSet([("Ann", "j", "0", "b", "1"), ("Ann", "j", "1", "b", "2")])
        w = check_no_absentmindedness(q)
        assert (w.y1, w.y2) == ("1", "2") and w.y3 is None


def test_against_oracles_on_random_pentaforms():
    rng = random.Random(41)
    for _ in range(300):
        q = random_pentaform(rng, 12)
        t = subroots(q)
        assert t == subroots_oracle(q) == subroots_by_slices(q)
        assert (check_perfect_recall(q) is None) == recall_oracle(q)
        assert (check_no_absentmindedness(q) is None) == (not absentminded_oracle(q))
        for node in t:
            sub = subgame(q, node)
            assert is_pentaform(sub) and root(sub) == node
            assert slice_union_closed(q, sub)
            parts = slice_partition(q)
            for j, s in slice_partition(sub).items():
                assert s == parts[j]


def test_subsets_keep_six_axioms():
    rng = random.Random(42)
    six = [AxiomId.PI_J, AxiomId.PJ_W, AxiomId.PWA_Y, AxiomId.PA_Y, AxiomId.PW_Y, AxiomId.PY]
    for _ in range(300):
        q = random_pentaform(rng, 12)
        sub = QuintupleSet(r for r in q if rng.random() < 0.6)
        assert all(check_axiom(sub, a) is None for a in six)
        assert is_pentaform(sub) == (check_axiom(sub, AxiomId.PWA) is None and check_axiom(sub, AxiomId.PR) is None)


def test_weakly_separated_unions_are_closed():
    rng = random.Random(43)
    for _ in range(200):
        q = random_pentaform(rng, 16)
        slices = list(slice_partition(q).values())
        rng.shuffle(slices)
        k = rng.randint(1, len(slices))
        family = [slices[:k], slices[k:]]
        parts = [QuintupleSet(r for s in f for r in s) for f in family]
        assert separation(parts).weak
        report = validate(parts[0] | parts[1])
        assert report.is_block
