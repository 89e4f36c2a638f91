"""Quintuple sets and their slice/projection algebra.

A value is either an *atom* (a nonempty ``str``) or a *node set* (a
``frozenset`` of atoms).  Players and situations may be either kind; decision
nodes, actions and successor nodes are always atoms.  Nothing in this module
assumes any pentaform axiom.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import NamedTuple, Union

from .errors import CoordinateError, NoUniqueRootError, UnknownSituationError

Value = Union[str, frozenset]
COORDINATES = ("I", "J", "W", "A", "Y")
_INDEX = {c: k for k, c in enumerate(COORDINATES)}


def value_key(v: Value) -> tuple:
    """Sort key for the canonical total order on values.

    Atoms sort lexicographically and come before node sets; node sets compare
    by their sorted element lists.
    """
    if isinstance(v, str):
        return (0, v)
    return (1, tuple(sorted(v)))


def tuple_key(t: Sequence[Value]) -> tuple:
    return tuple(value_key(v) for v in t)


def sort_values(values: Iterable[Value]) -> list[Value]:
    return sorted(values, key=value_key)


def as_atom(v) -> str:
    """Coerce ``v`` to an atom.  Integers are accepted for convenience."""
    if isinstance(v, bool):
        raise TypeError(f"not an atom: {v!r}")
    if isinstance(v, int):
        v = str(v)
    if not isinstance(v, str):
        raise TypeError(f"not an atom: {v!r}")
    if not v:
        raise ValueError("atoms must be nonempty strings")
    return v


def as_value(v) -> Value:
    if isinstance(v, (set, frozenset)):
        return frozenset(as_atom(x) for x in v)
    return as_atom(v)


def node_set(*atoms) -> frozenset:
    return frozenset(as_atom(a) for a in atoms)


def format_value(v: Value) -> str:
    if isinstance(v, str):
        return v
    return "{" + ",".join(sort_values(v)) + "}"


class Quintuple(NamedTuple):
    i: Value
    j: Value
    w: str
    a: str
    y: str

    @classmethod
    def of(cls, row) -> Quintuple:
        if isinstance(row, cls):
            return row
        i, j, w, a, y = row
        return cls(as_value(i), as_value(j), as_atom(w), as_atom(a), as_atom(y))

    def __str__(self) -> str:
        return "<" + ", ".join(format_value(v) for v in self) + ">"


class QuintupleSet:
    """An immutable, duplicate-free set of quintuples.

    Iteration follows the canonical order on ``(i, j, w, a, y)``.
    """

    __slots__ = ("_rows", "_ordered", "_hash")

    def __init__(self, rows: Iterable = ()):
        self._rows = frozenset(Quintuple.of(r) for r in rows)
        self._ordered = None
        self._hash = None

    @property
    def rows(self) -> frozenset:
        return self._rows

    def ordered(self) -> tuple:
        if self._ordered is None:
            self._ordered = tuple(sorted(self._rows, key=tuple_key))
        return self._ordered

    def __iter__(self) -> Iterator[Quintuple]:
        return iter(self.ordered())

    def __len__(self) -> int:
        return len(self._rows)

    def __bool__(self) -> bool:
        return bool(self._rows)

    def __contains__(self, row) -> bool:
        try:
            return Quintuple.of(row) in self._rows
        except (TypeError, ValueError):
            return False

    def __eq__(self, other) -> bool:
        if isinstance(other, QuintupleSet):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __le__(self, other: QuintupleSet) -> bool:
        return self._rows <= other._rows

    def __lt__(self, other: QuintupleSet) -> bool:
        return self._rows < other._rows

    def __or__(self, other: QuintupleSet) -> QuintupleSet:
        return QuintupleSet(self._rows | other._rows)

    def __and__(self, other: QuintupleSet) -> QuintupleSet:
        return QuintupleSet(self._rows & other._rows)

    def __sub__(self, other: QuintupleSet) -> QuintupleSet:
        return QuintupleSet(self._rows - other._rows)

    def issubset(self, other: QuintupleSet) -> bool:
        return self._rows <= other._rows

    def __repr__(self) -> str:
        return "QuintupleSet({" + ", ".join(str(r) for r in self) + "})"


def union(sets: Iterable[QuintupleSet]) -> QuintupleSet:
    rows: set = set()
    for q in sets:
        rows.update(q.rows)
    return QuintupleSet(rows)


def parse_coordinates(coords) -> tuple[str, ...]:
    """Accept ``"JI"`` or ``["J", "I"]``; reject empty, unknown or repeated."""
    seq = tuple(coords)
    if not seq:
        raise CoordinateError("coordinate sequence is empty")
    for c in seq:
        if c not in _INDEX:
            raise CoordinateError(f"unknown coordinate {c!r}; expected one of {'/'.join(COORDINATES)}")
    if len(set(seq)) != len(seq):
        raise CoordinateError(f"repeated coordinate in {''.join(seq)!r}")
    return seq


class TupleRelation:
    """A projection of a quintuple set: tuples over a coordinate sequence."""

    __slots__ = ("coords", "tuples")

    def __init__(self, coords, tuples: Iterable[tuple] = ()):
        self.coords = parse_coordinates(coords)
        self.tuples = frozenset(tuple(t) for t in tuples)
        for t in self.tuples:
            if len(t) != len(self.coords):
                raise ValueError(f"tuple {t!r} does not have arity {len(self.coords)}")

    @property
    def arity(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[tuple]:
        return iter(sorted(self.tuples, key=tuple_key))

    def __len__(self) -> int:
        return len(self.tuples)

    def __contains__(self, item) -> bool:
        if self.arity == 1 and not isinstance(item, tuple):
            item = (item,)
        return item in self.tuples

    def __eq__(self, other) -> bool:
        if isinstance(other, TupleRelation):
            return self.coords == other.coords and self.tuples == other.tuples
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coords, self.tuples))

    def __le__(self, other: TupleRelation) -> bool:
        return self.coords == other.coords and self.tuples <= other.tuples

    def values(self) -> frozenset:
        """The projected values of a single-coordinate relation."""
        if self.arity != 1:
            raise ValueError("values() needs a single-coordinate relation")
        return frozenset(t[0] for t in self.tuples)

    def image(self, key) -> frozenset:
        """Everything related to ``key`` through the first coordinate.

        For a pair relation this is a set of values (``F(w)`` for the
        feasibility correspondence); for wider relations a set of tuples.
        Absent keys give the empty set.
        """
        if self.arity < 2:
            raise ValueError("image() needs at least two coordinates")
        if self.arity == 2:
            return frozenset(t[1] for t in self.tuples if t[0] == key)
        return frozenset(t[1:] for t in self.tuples if t[0] == key)

    def is_function(self, n_keys: int = 1) -> bool:
        """True when the first ``n_keys`` coordinates determine the rest."""
        if not 1 <= n_keys < max(self.arity, 2):
            raise ValueError("n_keys must leave at least one value coordinate")
        seen: dict = {}
        for t in self.tuples:
            k, v = t[:n_keys], t[n_keys:]
            if seen.setdefault(k, v) != v:
                return False
        return True

    def as_dict(self, n_keys: int = 1) -> dict:
        if not self.is_function(n_keys):
            raise ValueError("relation is not a function")
        out = {}
        for t in self.tuples:
            k = t[0] if n_keys == 1 else t[:n_keys]
            v = t[n_keys] if self.arity - n_keys == 1 else t[n_keys:]
            out[k] = v
        return out

    def __repr__(self) -> str:
        body = ", ".join("<" + ", ".join(format_value(v) for v in t) + ">" for t in self)
        return f"TupleRelation({''.join(self.coords)}: {{{body}}})"


def project(q: QuintupleSet, coords) -> TupleRelation:
    seq = parse_coordinates(coords)
    idx = [_INDEX[c] for c in seq]
    return TupleRelation(seq, (tuple(row[k] for k in idx) for row in q.rows))


def slice_of(q: QuintupleSet, j) -> QuintupleSet:
    """All rows of ``q`` whose situation is ``j`` (empty when ``j`` is absent)."""
    j = as_value(j)
    return QuintupleSet(row for row in q.rows if row.j == j)


def slice_partition(q: QuintupleSet) -> dict:
    """Map each situation to its slice, keys in canonical order."""
    groups: dict = {}
    for row in q.rows:
        groups.setdefault(row.j, []).append(row)
    return {j: QuintupleSet(groups[j]) for j in sort_values(groups)}


class Components(NamedTuple):
    I: frozenset
    J: frozenset
    W: frozenset
    A: frozenset
    Y: frozenset


def components(q: QuintupleSet) -> Components:
    cols: list[set] = [set(), set(), set(), set(), set()]
    for row in q.rows:
        for k, v in enumerate(row):
            cols[k].add(v)
    return Components(*(frozenset(c) for c in cols))


def situations(q: QuintupleSet) -> frozenset:
    return frozenset(row.j for row in q.rows)


def decision_nodes(q: QuintupleSet) -> frozenset:
    return frozenset(row.w for row in q.rows)


def successor_nodes(q: QuintupleSet) -> frozenset:
    return frozenset(row.y for row in q.rows)


def _require_situation(q: QuintupleSet, j) -> QuintupleSet:
    s = slice_of(q, j)
    if not s:
        raise UnknownSituationError(j)
    return s


def info_set(q: QuintupleSet, j) -> frozenset:
    """The information set ``W_j`` of situation ``j``."""
    return decision_nodes(_require_situation(q, j))


def action_set(q: QuintupleSet, j) -> frozenset:
    return frozenset(row.a for row in _require_situation(q, j).rows)


def predecessor_relation(q: QuintupleSet) -> TupleRelation:
    """``p`` as the ``YW`` projection; a function only under ``[Pw<-y]``."""
    return project(q, "YW")


def feasibility(q: QuintupleSet) -> TupleRelation:
    """The feasibility correspondence ``F``; use ``.image(w)`` for ``F(w)``."""
    return project(q, "WA")


def nodes(q: QuintupleSet) -> frozenset:
    return decision_nodes(q) | successor_nodes(q)


def start_nodes(q: QuintupleSet) -> frozenset:
    return decision_nodes(q) - successor_nodes(q)


def end_nodes(q: QuintupleSet) -> frozenset:
    return successor_nodes(q) - decision_nodes(q)


def root(q: QuintupleSet) -> str:
    starts = start_nodes(q)
    if len(starts) != 1:
        raise NoUniqueRootError(starts)
    (r,) = starts
    return r
