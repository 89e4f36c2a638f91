"""The eight pentaform axioms, the block axioms, and their diagnostics.

Every failure comes back as a :class:`Violation` whose witnesses are drawn
verbatim from the input.  Checking the witness rows on their own reproduces
the failure.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import PreconditionError
from .relation import (
    QuintupleSet,
    components,
    end_nodes,
    format_value,
    slice_partition,
    sort_values,
    start_nodes,
    tuple_key,
)

__all__ = [
    "AxiomId",
    "AxiomReport",
    "BLOCK_AXIOMS",
    "Violation",
    "check_axiom",
    "end_nodes",
    "exit_steps",
    "is_block",
    "is_pentaform",
    "pjw_equivalence",
    "pwa_equivalence",
    "start_nodes",
    "validate",
]


class AxiomId(enum.Enum):
    PI_J = "[Pi<-j]"
    PJ_W = "[Pj<-w]"
    PWA = "[Pwa]"
    PWA_Y = "[Pwa->y]"
    PW_Y = "[Pw<-y]"
    PA_Y = "[Pa<-y]"
    PY = "[Py]"
    PR = "[Pr]"

    @property
    def label(self) -> str:
        return self.value


BLOCK_AXIOMS = tuple(AxiomId)[:7]


@dataclass(frozen=True)
class Violation:
    """One failed condition.  ``axiom`` is any enum member with a ``label``."""

    axiom: enum.Enum
    witnesses: tuple
    message: str

    def __str__(self) -> str:
        return f"{self.axiom.label}: {self.message}"


# key coordinates -> value coordinates, by row index
_FUNCTIONAL = {
    AxiomId.PI_J: ((1,), (0,)),
    AxiomId.PJ_W: ((2,), (1,)),
    AxiomId.PWA_Y: ((2, 3), (4,)),
    AxiomId.PW_Y: ((4,), (2,)),
    AxiomId.PA_Y: ((4,), (3,)),
}

_NAMES = "ijway"


def _functional_violation(q: QuintupleSet, axiom: AxiomId) -> Optional[Violation]:
    keys, vals = _FUNCTIONAL[axiom]
    first: dict = {}
    clashes: dict = {}
    for row in q:
        k = tuple(row[n] for n in keys)
        v = tuple(row[n] for n in vals)
        if k not in first:
            first[k] = row
        elif v != tuple(first[k][n] for n in vals) and k not in clashes:
            clashes[k] = row
    if not clashes:
        return None
    k = min(clashes, key=tuple_key)
    r1, r2 = first[k], clashes[k]
    kname = "".join(_NAMES[n] for n in keys)
    vname = "".join(_NAMES[n] for n in vals)
    kval = ",".join(format_value(x) for x in k)
    msg = (
        f"{kname}={kval} has two values of {vname}: "
        f"{','.join(format_value(r1[n]) for n in vals)} and {','.join(format_value(r2[n]) for n in vals)}"
    )
    return Violation(axiom, (r1, r2), msg)


def _pwa_violation(q: QuintupleSet) -> Optional[Violation]:
    for j, s in slice_partition(q).items():
        pairs = {(row.w, row.a) for row in s.rows}
        ws = sort_values({w for w, _ in pairs})
        acts = sort_values({a for _, a in pairs})
        for w in ws:
            for a in acts:
                if (w, a) not in pairs:
                    with_a = next(r for r in s if r.a == a)
                    at_w = next(r for r in s if r.w == w)
                    msg = f"situation {format_value(j)}: action {a} is feasible at {with_a.w} but not at {w}"
                    return Violation(AxiomId.PWA, (with_a, at_w), msg)
    return None


def exit_steps(q: QuintupleSet) -> dict:
    """For each successor ``y``, the least ``m >= 1`` with ``p^m(y)`` outside ``Y``.

    ``None`` marks a successor whose chain never leaves ``Y`` within ``|Y|``
    steps.  Requires ``[Pw<-y]``; the iteration is capped at ``|Y|``.
    """
    pred = {}
    for row in q.rows:
        if pred.setdefault(row.y, row.w) != row.w:
            raise PreconditionError("exit_steps needs [Pw<-y]: p is not a function")
    ys = pred.keys()
    bound = len(ys)
    steps: dict = {}
    for y in sort_values(ys):
        x, m = y, 0
        while m < bound:
            x = pred[x]
            m += 1
            if x not in ys:
                break
        steps[y] = m if x not in ys else None
    return steps


def _cycle_rows(q: QuintupleSet, start: str) -> tuple:
    pred = {row.y: row for row in q.rows}
    x = start
    for _ in range(len(pred)):
        x = pred[x].w
    cycle = []
    y = x
    while True:
        cycle.append(pred[y])
        y = pred[y].w
        if y == x:
            break
    return tuple(sorted(cycle, key=tuple_key))


def _py_violation(q: QuintupleSet) -> Optional[Violation]:
    if _functional_violation(q, AxiomId.PW_Y) is None:
        steps = exit_steps(q)
        stuck = [y for y in sort_values(steps) if steps[y] is None]
        if not stuck:
            return None
        rows = _cycle_rows(q, stuck[0])
        cyc = " -> ".join(r.y for r in rows)
        return Violation(AxiomId.PY, rows, f"predecessor chain from {stuck[0]} cycles inside Y through {cyc}")
    # [Pw<-y] fails so p is not a function: every successor must instead be
    # reachable along edges from some non-successor decision node.
    comp = components(q)
    children: dict = {}
    for row in q.rows:
        children.setdefault(row.w, set()).add(row.y)
    seen = set(comp.W - comp.Y)
    todo = deque(seen)
    while todo:
        x = todo.popleft()
        for c in children.get(x, ()):
            if c not in seen:
                seen.add(c)
                todo.append(c)
    lost = comp.Y - seen
    if not lost:
        return None
    rows = tuple(r for r in q if r.y in lost)
    return Violation(
        AxiomId.PY,
        rows,
        f"successors {', '.join(sort_values(lost))} are unreachable from any start node (path formulation)",
    )


def _pr_violation(q: QuintupleSet) -> Optional[Violation]:
    starts = start_nodes(q)
    if len(starts) == 1:
        return None
    return Violation(AxiomId.PR, tuple(sort_values(starts)), f"W \\ Y = {{{', '.join(sort_values(starts))}}}")


def check_axiom(q: QuintupleSet, axiom: AxiomId) -> Optional[Violation]:
    """Return ``None`` when ``q`` satisfies ``axiom``, else the first violation."""
    if axiom in _FUNCTIONAL:
        return _functional_violation(q, axiom)
    if axiom is AxiomId.PWA:
        return _pwa_violation(q)
    if axiom is AxiomId.PY:
        return _py_violation(q)
    if axiom is AxiomId.PR:
        return _pr_violation(q)
    raise ValueError(f"unknown axiom {axiom!r}")


@dataclass(frozen=True)
class AxiomReport:
    results: dict = field(default_factory=dict)

    @property
    def violations(self) -> list:
        return [v for v in self.results.values() if v is not None]

    @property
    def failed(self) -> frozenset:
        return frozenset(a for a, v in self.results.items() if v is not None)

    @property
    def is_block(self) -> bool:
        return all(self.results[a] is None for a in BLOCK_AXIOMS)

    @property
    def is_pentaform(self) -> bool:
        return all(v is None for v in self.results.values())

    def passed(self, axiom: AxiomId) -> bool:
        return self.results[axiom] is None

    def lines(self) -> list[str]:
        out = []
        for a, v in self.results.items():
            out.append(f"{a.label:10} {'pass' if v is None else 'FAIL  ' + v.message}")
        out.append(f"block: {'yes' if self.is_block else 'no'}")
        out.append(f"pentaform: {'yes' if self.is_pentaform else 'no'}")
        return out


def validate(q: QuintupleSet) -> AxiomReport:
    return AxiomReport({a: check_axiom(q, a) for a in AxiomId})


def is_pentaform(q: QuintupleSet) -> bool:
    return all(check_axiom(q, a) is None for a in AxiomId)


def is_block(q: QuintupleSet) -> bool:
    return all(check_axiom(q, a) is None for a in BLOCK_AXIOMS)


class PjwEquivalence(NamedTuple):
    functional: bool
    disjoint: bool
    injective_partition: bool


def pjw_equivalence(q: QuintupleSet) -> PjwEquivalence:
    """Three independently computed forms of ``[Pj<-w]``; they always agree."""
    functional = _functional_violation(q, AxiomId.PJ_W) is None
    info = {j: frozenset(r.w for r in s.rows) for j, s in slice_partition(q).items()}
    js = list(info)
    disjoint = all(
        not (info[js[a]] & info[js[b]]) for a in range(len(js)) for b in range(a + 1, len(js))
    )
    images = set(info.values())
    injective = len(images) == len(info)
    blocks = list(images)
    covers = frozenset().union(*blocks) == components(q).W
    pairwise = all(
        not (blocks[a] & blocks[b]) for a in range(len(blocks)) for b in range(a + 1, len(blocks))
    )
    return PjwEquivalence(functional, disjoint, injective and covers and pairwise)


class PwaEquivalence(NamedTuple):
    cartesian: bool
    product_form: bool
    feasible_equals_action_set: bool
    feasible_constant: bool


def pwa_equivalence(q: QuintupleSet) -> PwaEquivalence:
    """Four characterizations of ``[Pwa]``, equivalent under ``[Pj<-w]``."""
    if _functional_violation(q, AxiomId.PJ_W) is not None:
        raise PreconditionError("pwa_equivalence requires [Pj<-w]")
    feasible: dict = {}
    for row in q.rows:
        feasible.setdefault(row.w, set()).add(row.a)
    cartesian = product_form = equals_a = constant = True
    for s in slice_partition(q).values():
        pairs = {(r.w, r.a) for r in s.rows}
        first = {w for w, _ in pairs}
        second = {a for _, a in pairs}
        cartesian &= pairs == {(w, a) for w in first for a in second}
        w_j = {r.w for r in s.rows}
        a_j = {r.a for r in s.rows}
        product_form &= pairs == {(w, a) for w in w_j for a in a_j}
        equals_a &= all(feasible[w] == a_j for w in w_j)
        constant &= len({frozenset(feasible[w]) for w in w_j}) == 1
    return PwaEquivalence(cartesian, product_form, equals_a, constant)
