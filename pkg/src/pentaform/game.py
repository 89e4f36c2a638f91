"""Pentaform games, Gm games, and the bijection between them.

``pentaform_of`` expands every edge of a Gm game into a quintuple;
``standardize`` projects a pentaform game back into the six Gm components.
On pentaform games whose situations are their own information sets the two
are mutually inverse.

Utility profiles map each player to a dict from runs (``frozenset`` node
sets) to extended reals (Python floats, ``inf`` and ``-inf`` allowed).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, fields
from typing import Mapping, NamedTuple, Optional

from .axioms import Violation, validate
from .errors import InvalidGameError, InvalidTreeError
from .relation import (
    QuintupleSet,
    as_atom,
    as_value,
    components,
    feasibility,
    format_value,
    project,
    slice_partition,
    sort_values,
)
from .relation import nodes as relation_nodes
from .relation import root as relation_root
from .tree import OutTree, out_tree_of, precedence_pairs, runs


class GmCondition(enum.Enum):
    GM1 = "[Gm1]"
    GM2 = "[Gm2]"
    GM3 = "[Gm3]"
    GM4 = "[Gm4]"
    GM5 = "[Gm5]"
    GM6 = "[Gm6]"
    PENTAFORM = "[pentaform]"
    UTILITY = "[utility]"

    @property
    def label(self) -> str:
        return self.value


def extended_real(x) -> float:
    """Coerce to an extended real: any real, ``inf`` or ``-inf``; never NaN."""
    if isinstance(x, str):
        if x not in ("inf", "-inf"):
            raise ValueError(f"not an extended real: {x!r}")
        return float(x)
    if isinstance(x, bool):
        raise TypeError("booleans are not utilities")
    v = float(x)
    if math.isnan(v):
        raise ValueError("NaN is not an extended real")
    return v


def utility_profile(u: Mapping) -> dict:
    """Normalize ``{player: {run: value}}``; runs become frozensets of atoms."""
    return {
        as_value(i): {frozenset(as_atom(x) for x in run): extended_real(v) for run, v in ui.items()}
        for i, ui in u.items()
    }


@dataclass(frozen=True, eq=False)
class PentaformGame:
    q: QuintupleSet
    u: dict

    def __eq__(self, other):
        if not isinstance(other, PentaformGame):
            return NotImplemented
        return self.q == other.q and self.u == other.u


@dataclass(frozen=True, eq=False)
class GmGame:
    """``(X, E, H, lambda, tau, u)``.  Derived sets are never stored."""

    nodes: frozenset
    edges: frozenset
    info_sets: frozenset
    labels: dict
    control: dict
    u: dict

    @classmethod
    def build(cls, nodes, edges, info_sets, labels, control, u) -> GmGame:
        return cls(
            frozenset(as_atom(x) for x in nodes),
            frozenset((as_atom(w), as_atom(y)) for w, y in edges),
            frozenset(frozenset(as_atom(x) for x in h) for h in info_sets),
            {(as_atom(w), as_atom(y)): as_atom(a) for (w, y), a in labels.items()},
            {as_atom(w): as_value(i) for w, i in control.items()},
            utility_profile(u),
        )

    def __eq__(self, other):
        if not isinstance(other, GmGame):
            return NotImplemented
        return first_mismatch(self, other) is None


def first_mismatch(g1: GmGame, g2: GmGame) -> Optional[str]:
    for f in fields(GmGame):
        if getattr(g1, f.name) != getattr(g2, f.name):
            return f.name
    return None


class GmDerived(NamedTuple):
    tree: OutTree
    W: frozenset
    Y: frozenset
    root: str
    p: dict
    A: frozenset
    F: dict
    I: frozenset
    runs: frozenset
    H_of: dict


def derive(g: GmGame) -> GmDerived:
    """Everything a valid Gm game determines.  Raises on an invalid tree."""
    tree = OutTree(g.nodes, g.edges)
    W = frozenset(w for w, _ in g.edges)
    Y = frozenset(y for _, y in g.edges)
    F: dict = {w: set() for w in W}
    for (w, _), a in g.labels.items():
        F.setdefault(w, set()).add(a)
    H_of = {w: h for h in g.info_sets for w in h}
    return GmDerived(
        tree=tree,
        W=W,
        Y=Y,
        root=tree.root,
        p={y: w for w, y in g.edges},
        A=frozenset(g.labels.values()),
        F={w: frozenset(s) for w, s in F.items()},
        I=frozenset(g.control.values()),
        runs=runs(tree),
        H_of=H_of,
    )


def _check_utility(u: Mapping, players: frozenset, zs: frozenset, cond) -> list:
    out = []
    if frozenset(u) != players:
        out.append(
            Violation(
                cond,
                tuple(sort_values(frozenset(u) ^ players)),
                f"utility players {sorted(map(format_value, u))} differ from {sorted(map(format_value, players))}",
            )
        )
    for i in sort_values(u):
        if i in players and frozenset(u[i]) != zs:
            missing = zs - frozenset(u[i])
            extra = frozenset(u[i]) - zs
            out.append(
                Violation(
                    cond,
                    tuple(sorted(missing | extra, key=sorted)),
                    f"utility of {format_value(i)} is not defined exactly on the runs"
                    f" (missing {len(missing)}, extra {len(extra)})",
                )
            )
    return out


def validate_gm(g: GmGame) -> list:
    """All ``[Gm1]``-``[Gm6]`` failures of ``g``; empty when it is a Gm game."""
    out = []
    try:
        tree = OutTree(g.nodes, g.edges)
    except InvalidTreeError as exc:
        out.append(Violation(GmCondition.GM1, (), str(exc)))
        tree = None
    if tree is not None and tree.trivial:
        out.append(Violation(GmCondition.GM1, (), "out-tree is trivial"))
        tree = None
    W = frozenset(w for w, _ in g.edges)

    blocks = list(g.info_sets)
    seen: dict = {}
    gm2 = True
    for h in sorted(blocks, key=sorted):
        if not h:
            out.append(Violation(GmCondition.GM2, (h,), "empty information set"))
            gm2 = False
        for w in sort_values(h):
            if w in seen:
                out.append(Violation(GmCondition.GM2, (w,), f"node {w} lies in two information sets"))
                gm2 = False
            seen[w] = h
    if frozenset(seen) != W:
        diff = frozenset(seen) ^ W
        out.append(Violation(GmCondition.GM2, tuple(sort_values(diff)), "information sets do not cover W exactly"))
        gm2 = False

    gm3 = True
    if frozenset(g.labels) != g.edges:
        diff = frozenset(g.labels) ^ g.edges
        out.append(Violation(GmCondition.GM3, tuple(sorted(diff)), "labeling function is not defined exactly on E"))
        gm3 = False
    used: dict = {}
    for (w, y) in sorted(g.labels):
        a = g.labels[(w, y)]
        if (w, a) in used:
            out.append(
                Violation(
                    GmCondition.GM3,
                    ((used[(w, a)], a), ((w, y), a)),
                    f"edges <{used[(w, a)][0]},{used[(w, a)][1]}> and <{w},{y}> share action {a}",
                )
            )
            gm3 = False
            break
        used[(w, a)] = (w, y)

    if gm2 and gm3:
        F: dict = {}
        for (w, _), a in g.labels.items():
            F.setdefault(w, set()).add(a)
        for h in sorted(blocks, key=sorted):
            fs = {frozenset(F.get(w, ())) for w in h}
            if len(fs) > 1:
                out.append(Violation(GmCondition.GM4, (h,), f"feasible sets differ on {format_value(h)}"))
                break

    if frozenset(g.control) != W:
        diff = frozenset(g.control) ^ W
        out.append(Violation(GmCondition.GM5, tuple(sort_values(diff)), "control function is not defined exactly on W"))
    elif gm2:
        for h in sorted(blocks, key=sorted):
            ps = {g.control[w] for w in h}
            if len(ps) > 1:
                out.append(Violation(GmCondition.GM5, (h,), f"players differ on {format_value(h)}"))
                break

    if tree is not None:
        out.extend(_check_utility(g.u, frozenset(g.control.values()), runs(tree), GmCondition.GM6))
    return out


def validate_pentaform_game(pg: PentaformGame) -> list:
    report = validate(pg.q)
    if not report.is_pentaform:
        return [Violation(GmCondition.PENTAFORM, tuple(report.violations), "q is not a pentaform")]
    return _check_utility(pg.u, components(pg.q).I, runs(out_tree_of(pg.q)), GmCondition.UTILITY)


def _require_gm(g: GmGame) -> None:
    bad = validate_gm(g)
    if bad:
        raise InvalidGameError(bad)


def _require_pentaform_game(pg: PentaformGame) -> None:
    bad = validate_pentaform_game(pg)
    if bad:
        raise InvalidGameError(bad)


def pentaform_of(g: GmGame) -> PentaformGame:
    """Operator P: one quintuple ``<tau(w), H_w, w, lambda(w,y), y>`` per edge."""
    _require_gm(g)
    h_of = {w: h for h in g.info_sets for w in h}
    q = QuintupleSet((g.control[w], h_of[w], w, g.labels[(w, y)], y) for w, y in g.edges)
    return PentaformGame(q, g.u)


def standardize(pg: PentaformGame) -> GmGame:
    """Operator S: project a pentaform game onto the six Gm components."""
    _require_pentaform_game(pg)
    q = pg.q
    return GmGame(
        nodes=relation_nodes(q),
        edges=project(q, "WY").tuples,
        info_sets=frozenset(frozenset(r.w for r in s.rows) for s in slice_partition(q).values()),
        labels=project(q, "WYA").as_dict(n_keys=2),
        control=project(q, "WI").as_dict(),
        u=pg.u,
    )


def has_information_set_situations(q: QuintupleSet) -> bool:
    return all(j == frozenset(r.w for r in s.rows) for j, s in slice_partition(q).items())


def information_set_rewrite(q: QuintupleSet) -> QuintupleSet:
    """Replace every situation by its information set."""
    info = {j: frozenset(r.w for r in s.rows) for j, s in slice_partition(q).items()}
    return QuintupleSet((r.i, info[r.j], r.w, r.a, r.y) for r in q.rows)


class RoundTrip(enum.Enum):
    IDENTITY = "identity"
    REWRITTEN = "rewritten"
    MISMATCH = "mismatch"


@dataclass(frozen=True)
class RoundTripReport:
    direction: str  # "SP" or "PS"
    status: RoundTrip
    mismatch: Optional[str]
    image: object

    @property
    def ok(self) -> bool:
        return self.status is RoundTrip.IDENTITY


def roundtrip_check(game) -> RoundTripReport:
    """Check ``SP(g) = g`` for a Gm game or ``PS(pg) = pg`` for a pentaform game.

    A pentaform game without information-set situations cannot be a fixed
    point; it is reported as ``REWRITTEN`` when ``PS`` yields exactly its
    information-set rewrite, and as ``MISMATCH`` otherwise.
    """
    if isinstance(game, GmGame):
        back = standardize(pentaform_of(game))
        miss = first_mismatch(back, game)
        return RoundTripReport("SP", RoundTrip.IDENTITY if miss is None else RoundTrip.MISMATCH, miss, back)
    if not isinstance(game, PentaformGame):
        raise TypeError(f"expected GmGame or PentaformGame, got {type(game).__name__}")
    back = pentaform_of(standardize(game))
    if back.u != game.u:
        return RoundTripReport("PS", RoundTrip.MISMATCH, "u", back)
    if back.q == game.q:
        return RoundTripReport("PS", RoundTrip.IDENTITY, None, back)
    if not has_information_set_situations(game.q) and back.q == information_set_rewrite(game.q):
        return RoundTripReport("PS", RoundTrip.REWRITTEN, "q", back)
    return RoundTripReport("PS", RoundTrip.MISMATCH, "q", back)


BATTERY = (
    ("a", "nodes"),
    ("b", "edges"),
    ("c", "root"),
    ("d", "decision_nodes"),
    ("e", "successor_nodes"),
    ("f", "predecessor"),
    ("g", "weak_precedence"),
    ("h", "strict_precedence"),
    ("i", "runs"),
    ("j", "situations_are_information_sets"),
    ("k", "labels"),
    ("l", "actions"),
    ("m", "feasibility"),
    ("n", "control"),
    ("o", "players"),
    ("p", "utility"),
)


def _closure_pairs(xs: frozenset, pred: dict, strict: bool) -> frozenset:
    out = set()
    for x in xs:
        if not strict:
            out.add((x, x))
        a = x
        while a in pred:
            a = pred[a]
            out.add((a, x))
    return frozenset(out)


def equality_battery(g: GmGame) -> dict:
    """The sixteen equalities between a Gm game and its pentaform image.

    Keys are ``"a_nodes"`` ... ``"p_utility"``.  The Gm side is derived from
    the out-tree of ``g``; the pentaform side from projections of ``P(g)``.
    """
    d = derive(g)
    pg = pentaform_of(g)
    q = pg.q
    comp = components(q)
    p_bar = project(q, "YW").as_dict()
    xs = comp.W | comp.Y
    ends = comp.Y - comp.W
    runs_bar = set()
    for y in ends:
        chain = [y]
        while chain[-1] in p_bar:
            chain.append(p_bar[chain[-1]])
        runs_bar.add(frozenset(chain))
    f_bar = feasibility(q)
    checks = {
        "nodes": xs == g.nodes,
        "edges": project(q, "WY").tuples == g.edges,
        "root": relation_root(q) == d.root,
        "decision_nodes": comp.W == d.W,
        "successor_nodes": comp.Y == d.Y,
        "predecessor": p_bar == d.p,
        "weak_precedence": _closure_pairs(xs, p_bar, False) == precedence_pairs(d.tree),
        "strict_precedence": _closure_pairs(xs, p_bar, True) == precedence_pairs(d.tree, strict=True),
        "runs": frozenset(runs_bar) == d.runs,
        "situations_are_information_sets": comp.J == g.info_sets,
        "labels": project(q, "WYA").as_dict(n_keys=2) == g.labels,
        "actions": comp.A == d.A,
        "feasibility": {w: f_bar.image(w) for w in comp.W} == d.F,
        "control": project(q, "WI").as_dict() == g.control,
        "players": comp.I == d.I,
        "utility": pg.u == g.u,
    }
    return {f"{k}_{name}": checks[name] for k, name in BATTERY}
