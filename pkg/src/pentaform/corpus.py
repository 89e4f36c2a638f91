"""Small named example games used by the tests, the docs and the CLI corpus."""

from __future__ import annotations

from pathlib import Path

from .game import GmGame, PentaformGame
from .io import Document, serialize
from .relation import QuintupleSet, node_set


def alex() -> QuintupleSet:
    """One player, one move, two outcomes."""
    return QuintupleSet(
        [
            ("Alex", {"0"}, "0", "left", "1"),
            ("Alex", {"0"}, "0", "right", "2"),
        ]
    )


_HORSE = [
    ("Kid", "0", "c", "1"),
    ("Kid", "0", "b", "2"),
    ("Dog", "1", "g", "8"),
    ("Dog", "1", "d", "3"),
    ("Teacher", "2", "e", "4"),
    ("Teacher", "2", "f", "5"),
    ("Teacher", "3", "e", "6"),
    ("Teacher", "3", "f", "7"),
]


def horse() -> QuintupleSet:
    """Kid, Dog and Teacher; situations are information sets."""
    info = {"0": node_set("0"), "1": node_set("1"), "2": node_set("2", "3"), "3": node_set("2", "3")}
    return QuintupleSet((i, info[w], w, a, y) for i, w, a, y in _HORSE)


def horse_named() -> QuintupleSet:
    """The same tree with situations named ``today``, ``tonight``, ``tomorrow``."""
    names = {"0": "today", "1": "tonight", "2": "tomorrow", "3": "tomorrow"}
    return QuintupleSet((i, names[w], w, a, y) for i, w, a, y in _HORSE)


def kid_teacher() -> QuintupleSet:
    """``horse_named`` with Kid and Teacher merged into one forgetful player."""
    return QuintupleSet(
        (("KidTeacher" if r.i in ("Kid", "Teacher") else r.i), r.j, r.w, r.a, r.y) for r in horse_named()
    )


def two_roots() -> QuintupleSet:
    """Two disjoint one-row trees: everything holds except the unique root."""
    return QuintupleSet([("41", "42", "43", "44", "45"), ("46", "47", "48", "49", "50")])


def guilty() -> QuintupleSet:
    return QuintupleSet(
        [
            ("Kid", "guilty", "4", "s", "11"),
            ("Kid", "guilty", "4", "s~", "12"),
            ("Kid", "guilty", "5", "s", "13"),
            ("Kid", "guilty", "5", "s~", "14"),
        ]
    )


def innocent() -> QuintupleSet:
    return QuintupleSet(
        [
            ("Kid", "innocent", "6", "s", "15"),
            ("Kid", "innocent", "6", "s~", "16"),
            ("Kid", "innocent", "7", "s", "17"),
            ("Kid", "innocent", "7", "s~", "18"),
        ]
    )


def _ann(*rows) -> QuintupleSet:
    return QuintupleSet(("Ann", "now", w, a, y) for w, a, y in rows)


def single_failures() -> dict:
    """Eight relations, each failing exactly one axiom (keyed by that axiom's label)."""
    return {
        "[Pi<-j]": QuintupleSet([("Ann", "now", "0", "b", "1"), ("Bob", "now", "0", "b", "1")]),
        "[Pj<-w]": QuintupleSet([("Ann", "now", "0", "b", "1"), ("Ann", "later", "0", "b", "1")]),
        "[Pwa]": _ann(("0", "b", "1"), ("0", "c", "2"), ("1", "b", "3")),
        "[Pwa->y]": _ann(("0", "b", "1"), ("0", "b", "2")),
        "[Pw<-y]": _ann(("0", "b", "1"), ("1", "b", "1")),
        "[Pa<-y]": _ann(("0", "b", "1"), ("0", "c", "1")),
        "[Py]": _ann(("0", "b", "1"), ("2", "b", "3"), ("3", "b", "2")),
        "[Pr]": _ann(("0", "b", "1"), ("2", "b", "3")),
    }


def alex_gm() -> GmGame:
    return GmGame.build(
        nodes=["0", "1", "2"],
        edges=[("0", "1"), ("0", "2")],
        info_sets=[{"0"}],
        labels={("0", "1"): "left", ("0", "2"): "right"},
        control={"0": "Alex"},
        u={"Alex": {frozenset({"0", "1"}): 2, frozenset({"0", "2"}): 4}},
    )


def alex_game() -> PentaformGame:
    return PentaformGame(alex(), {"Alex": {frozenset({"0", "1"}): 2.0, frozenset({"0", "2"}): 4.0}})


_HORSE_RUNS = {
    ("0", "1", "8"): (1, 3, 0),
    ("0", "1", "3", "6"): (2, 0, 1),
    ("0", "1", "3", "7"): (0, 1, 2),
    ("0", "2", "4"): (3, 0, 1),
    ("0", "2", "5"): (1, 2, 0),
}


def horse_utility() -> dict:
    u: dict = {"Kid": {}, "Dog": {}, "Teacher": {}}
    for run, (kid, dog, teacher) in _HORSE_RUNS.items():
        key = frozenset(run)
        u["Kid"][key] = float(kid)
        u["Dog"][key] = float(dog)
        u["Teacher"][key] = float(teacher)
    return u


def horse_game() -> PentaformGame:
    return PentaformGame(horse(), horse_utility())


def horse_named_game() -> PentaformGame:
    return PentaformGame(horse_named(), horse_utility())


def horse_gm() -> GmGame:
    edges = [(w, y) for _, w, _, y in _HORSE]
    return GmGame.build(
        nodes={x for e in edges for x in e},
        edges=edges,
        info_sets=[{"0"}, {"1"}, {"2", "3"}],
        labels={(w, y): a for _, w, a, y in _HORSE},
        control={w: i for i, w, _, _ in _HORSE},
        u=horse_utility(),
    )


def chain() -> QuintupleSet:
    return QuintupleSet([("i", "j1", "0", "a", "1"), ("i", "j2", "1", "a", "2")])


def corpus() -> dict:
    """File stem -> object for every example shipped under ``fixtures/``."""
    out = {
        "q_dot": alex(),
        "q_ddot": horse(),
        "q_tdot": horse_named(),
        "q_eq1": two_roots(),
        "kidteacher": kid_teacher(),
        "q_guilty": guilty(),
        "q_innocent": innocent(),
        "chain": chain(),
        "fig31_gm": alex_gm(),
        "alex_game": alex_game(),
        "horse_game": horse_game(),
        "horse_named_game": horse_named_game(),
        "horse_gm": horse_gm(),
    }
    for k, q in enumerate(single_failures().values(), start=1):
        out[f"single_failure_{k}"] = q
    return out


def write_corpus(directory) -> list:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for stem, obj in sorted(corpus().items()):
        path = d / f"{stem}.json"
        path.write_bytes(serialize(Document.of(obj)))
        written.append(path)
    return written
