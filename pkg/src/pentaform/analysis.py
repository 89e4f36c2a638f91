"""Subgames, unions of blocks, and recall properties of pentaforms."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .axioms import validate
from .errors import (
    AxiomViolationError,
    ChainError,
    NotASubrootError,
    PreconditionError,
    SeparationError,
    UnknownNodeError,
)
from .relation import (
    Quintuple,
    QuintupleSet,
    as_atom,
    components,
    end_nodes,
    format_value,
    root,
    slice_partition,
    sort_values,
    start_nodes,
    union,
)
from .tree import OutTree, out_tree_of


def _require_pentaform(q: QuintupleSet) -> OutTree:
    report = validate(q)
    if not report.is_pentaform:
        raise AxiomViolationError(report.violations)
    return out_tree_of(q)


# -- decomposition ---------------------------------------------------------


def _weakly_after(q: QuintupleSet, tree: OutTree, w: str) -> QuintupleSet:
    below = tree.descendants(w)
    return QuintupleSet(r for r in q.rows if r.w in below)


def weakly_after(q: QuintupleSet, w) -> QuintupleSet:
    """Rows whose decision node is weakly after ``w``."""
    w = as_atom(w)
    tree = _require_pentaform(q)
    if w not in components(q).W:
        raise UnknownNodeError(w)
    return _weakly_after(q, tree, w)


def _is_subroot(q: QuintupleSet, tree: OutTree, t: str) -> bool:
    tq = _weakly_after(q, tree, t)
    inside = {r.j for r in tq.rows}
    outside = {r.j for r in (q - tq).rows}
    return not inside & outside


def subroots(q: QuintupleSet) -> frozenset:
    """Decision nodes whose weakly-after rows share no situation with the rest."""
    tree = _require_pentaform(q)
    return frozenset(t for t in components(q).W if _is_subroot(q, tree, t))


def subgame(q: QuintupleSet, t) -> QuintupleSet:
    t = as_atom(t)
    tree = _require_pentaform(q)
    if t not in components(q).W:
        raise UnknownNodeError(t)
    if not _is_subroot(q, tree, t):
        raise NotASubrootError(f"{t} is not a subroot: its subtree shares a situation with the rest")
    return _weakly_after(q, tree, t)


def quintuple_of_successor(q: QuintupleSet, y) -> Quintuple:
    """The unique row ending at ``y``."""
    y = as_atom(y)
    rows = [r for r in q.rows if r.y == y]
    if not rows:
        raise UnknownNodeError(y)
    if len(rows) > 1:
        raise PreconditionError(f"successor {y} ends {len(rows)} rows")
    return rows[0]


# -- composition -----------------------------------------------------------


class Separation(enum.Enum):
    STRONG = "strong"
    WEAK = "weak"
    NONE = "none"


class Overlap(NamedTuple):
    """What members ``first`` and ``second`` of a family share."""

    first: int
    second: int
    situations: frozenset
    decision_nodes: frozenset
    successor_nodes: frozenset
    nodes: frozenset


@dataclass(frozen=True)
class SeparationVerdict:
    level: Separation
    overlaps: tuple  # every pair that shares something, as Overlap

    @property
    def weak(self) -> bool:
        return self.level is not Separation.NONE

    @property
    def strong(self) -> bool:
        return self.level is Separation.STRONG


def separation(family: Sequence[QuintupleSet]) -> SeparationVerdict:
    """Pairwise disjointness over distinct positions of ``family``."""
    comps = [components(q) for q in family]
    overlaps = []
    weak = strong = True
    for a in range(len(comps)):
        for b in range(a + 1, len(comps)):
            c1, c2 = comps[a], comps[b]
            o = Overlap(
                a,
                b,
                c1.J & c2.J,
                c1.W & c2.W,
                c1.Y & c2.Y,
                (c1.W | c1.Y) & (c2.W | c2.Y),
            )
            if o.situations or o.decision_nodes or o.successor_nodes:
                weak = False
            if o.situations or o.nodes:
                strong = False
                overlaps.append(o)
    level = Separation.STRONG if strong else Separation.WEAK if weak else Separation.NONE
    return SeparationVerdict(level, tuple(overlaps))


class UnionResult(NamedTuple):
    q: QuintupleSet
    start_nodes: frozenset
    end_nodes: frozenset


def _require_block(q: QuintupleSet, name: str) -> None:
    report = validate(q)
    if not report.is_block:
        raise SeparationError(f"{name} is not a block: " + "; ".join(str(v) for v in report.violations))


def _describe(o: Overlap) -> str:
    parts = []
    for label, s in (
        ("situations", o.situations),
        ("decision nodes", o.decision_nodes),
        ("successor nodes", o.successor_nodes),
        ("nodes", o.nodes),
    ):
        if s:
            parts.append(f"{label} {', '.join(format_value(v) for v in sort_values(s))}")
    return f"members {o.first} and {o.second} share " + "; ".join(parts)


def _check_union(result: UnionResult) -> UnionResult:
    report = validate(result.q)
    if not report.is_block:
        raise AssertionError("union of blocks is not a block: " + "; ".join(map(str, report.violations)))
    if result.start_nodes != start_nodes(result.q) or result.end_nodes != end_nodes(result.q):
        raise AssertionError("start/end formulas disagree with the union")
    return result


def union_pair(q1: QuintupleSet, q2: QuintupleSet) -> UnionResult:
    """Union of two weakly separated blocks where ``q1`` may feed into ``q2``."""
    _require_block(q1, "first set")
    _require_block(q2, "second set")
    verdict = separation([q1, q2])
    if not verdict.weak:
        raise SeparationError("blocks are not weakly separated: " + _describe(verdict.overlaps[0]), verdict)
    s1, e1 = start_nodes(q1), end_nodes(q1)
    s2, e2 = start_nodes(q2), end_nodes(q2)
    clash = s1 & e2
    if clash:
        raise SeparationError(
            f"start nodes of the first block are end nodes of the second: {', '.join(sort_values(clash))}",
            verdict,
        )
    return _check_union(UnionResult(q1 | q2, s1 | (s2 - e1), (e1 - s2) | e2))


def union_family(family: Sequence[QuintupleSet]) -> UnionResult:
    """Union of a strongly separated family of blocks."""
    for k, q in enumerate(family):
        _require_block(q, f"member {k}")
    verdict = separation(family)
    if not verdict.strong:
        raise SeparationError("family is not strongly separated: " + _describe(verdict.overlaps[0]), verdict)
    starts = frozenset().union(*(start_nodes(q) for q in family))
    ends = frozenset().union(*(end_nodes(q) for q in family))
    return _check_union(UnionResult(union(family), starts, ends))


def union_chain(seq: Sequence[QuintupleSet]) -> QuintupleSet:
    """Union of a nested sequence of pentaforms sharing one root."""
    if not seq:
        raise ChainError("sequence is empty", 0)
    for k, q in enumerate(seq):
        if not validate(q).is_pentaform:
            raise ChainError(f"element {k} is not a pentaform", k)
    r0 = root(seq[0])
    for k in range(1, len(seq)):
        if not seq[k - 1] <= seq[k]:
            raise ChainError(f"element {k - 1} is not contained in element {k}", k)
        if root(seq[k]) != r0:
            raise ChainError(f"element {k} has root {root(seq[k])}, expected {r0}", k)
    out = union(seq)
    if not validate(out).is_pentaform or root(out) != r0:
        raise AssertionError("chain union is not a pentaform with the initial root")
    return out


# -- recall ----------------------------------------------------------------


class RecallWitness(NamedTuple):
    """Successor nodes exhibiting a failure; ``y3`` is ``None`` for absentmindedness."""

    y1: str
    y2: str
    y3: Optional[str] = None


def _successor_table(q: QuintupleSet) -> tuple:
    tree = _require_pentaform(q)
    row_of = {r.y: r for r in q.rows}
    strict_before = {y: frozenset(a for a in tree.ancestors(y) if a in row_of) for y in row_of}
    return row_of, strict_before


def check_perfect_recall(q: QuintupleSet) -> Optional[RecallWitness]:
    """``None`` when ``q`` has perfect recall, else a failing ``(y1, y2, y3)``.

    Whenever ``y1`` strictly precedes ``y2`` with the same player and ``y3``
    shares ``y2``'s situation, some ``y4`` strictly before ``y3`` must repeat
    ``y1``'s situation and action.  Candidates are scanned with ``y2`` first,
    then ``y1`` and ``y3``, each in canonical order, so the reported triple
    names the earliest later decision at which something was forgotten.
    """
    row_of, before = _successor_table(q)
    ys = sort_values(row_of)
    by_situation: dict = {}
    for y in ys:
        by_situation.setdefault(row_of[y].j, []).append(y)
    for y2 in ys:
        r2 = row_of[y2]
        for y1 in sort_values(before[y2]):
            r1 = row_of[y1]
            if r1.i != r2.i:
                continue
            for y3 in by_situation[r2.j]:
                if not any(row_of[y4].j == r1.j and row_of[y4].a == r1.a for y4 in before[y3]):
                    return RecallWitness(y1, y2, y3)
    return None


def check_no_absentmindedness(q: QuintupleSet) -> Optional[RecallWitness]:
    """``None`` when no successor strictly precedes another in its own situation."""
    row_of, before = _successor_table(q)
    for y2 in sort_values(row_of):
        for y1 in sort_values(before[y2]):
            if row_of[y1].j == row_of[y2].j:
                return RecallWitness(y1, y2)
    return None


def slice_union_closed(q: QuintupleSet, part: QuintupleSet) -> bool:
    """True when ``part`` is a union of slices of ``q``."""
    slices = slice_partition(q)
    return all(slices[j] <= part for j in {r.j for r in part.rows})


__all__ = [
    "Overlap",
    "RecallWitness",
    "Separation",
    "SeparationVerdict",
    "UnionResult",
    "check_no_absentmindedness",
    "check_perfect_recall",
    "quintuple_of_successor",
    "separation",
    "slice_union_closed",
    "subgame",
    "subroots",
    "union_chain",
    "union_family",
    "union_pair",
    "weakly_after",
]
