"""Rooted trees, out-trees and edge-trees, with precedence and runs.

Only finite structures are representable.  A run is represented by its node
set (a ``frozenset`` of atoms); the edges of a run are recovered with
:func:`run_edges`.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .axioms import AxiomId, Violation, check_axiom
from .errors import AxiomViolationError, InvalidTreeError, UnknownNodeError
from .relation import QuintupleSet, as_atom, nodes, project, sort_values

Run = frozenset


class EdgeAxiom(enum.Enum):
    E1 = "[E1]"
    E2 = "[E2]"
    E3 = "[E3]"

    @property
    def label(self) -> str:
        return self.value


def _pairs(edges: Iterable) -> frozenset:
    return frozenset((as_atom(w), as_atom(y)) for w, y in edges)


@dataclass(frozen=True)
class RootedTree:
    """An undirected tree ``(X, edges)`` with a distinguished root."""

    nodes: frozenset
    edges: frozenset
    root: str

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(as_atom(x) for x in self.nodes))
        object.__setattr__(self, "edges", frozenset(frozenset(as_atom(x) for x in e) for e in self.edges))
        object.__setattr__(self, "root", as_atom(self.root))
        if self.root not in self.nodes:
            raise InvalidTreeError(f"root {self.root} is not a node")
        for e in self.edges:
            if len(e) != 2 or not e <= self.nodes:
                raise InvalidTreeError(f"edge {sorted(e)} is not a two-element subset of the nodes")
        # acyclic: union-find never joins two nodes that are already linked
        parent = {x: x for x in self.nodes}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in sorted(self.edges, key=sorted):
            a, b = sorted(e)
            ra, rb = find(a), find(b)
            if ra == rb:
                raise InvalidTreeError(f"edge {{{a}, {b}}} closes a cycle")
            parent[ra] = rb
        if len({find(x) for x in self.nodes}) != 1:
            raise InvalidTreeError("graph is not connected")

    @cached_property
    def neighbours(self) -> dict:
        adj: dict = {x: set() for x in self.nodes}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return adj


@dataclass(frozen=True)
class OutTree:
    """The divergent orientation of a rooted tree.

    A trivial out-tree has one node and no edges.  Otherwise the edge set must
    be an edge-tree whose endpoints are exactly the nodes.
    """

    nodes: frozenset
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(as_atom(x) for x in self.nodes))
        object.__setattr__(self, "edges", _pairs(self.edges))
        for w, y in self.edges:
            if w == y:
                raise InvalidTreeError(f"loop at {w}")
            if (y, w) in self.edges:
                raise InvalidTreeError(f"edges <{w},{y}> and <{y},{w}> are not asymmetric")
            if w not in self.nodes or y not in self.nodes:
                raise InvalidTreeError(f"edge <{w},{y}> leaves the node set")
        if not self.edges:
            if len(self.nodes) != 1:
                raise InvalidTreeError("an out-tree without edges must have exactly one node")
            return
        bad = validate_edge_tree(self.edges)
        if bad is not None:
            raise InvalidTreeError(str(bad))
        ends = {w for w, _ in self.edges} | {y for _, y in self.edges}
        if ends != self.nodes:
            raise InvalidTreeError(f"isolated nodes {sort_values(self.nodes - ends)}")

    @property
    def trivial(self) -> bool:
        return not self.edges

    @cached_property
    def parent(self) -> dict:
        """The immediate-predecessor function ``p``: successor -> decision node."""
        return {y: w for w, y in self.edges}

    @cached_property
    def children(self) -> dict:
        out: dict = {x: [] for x in self.nodes}
        for w, y in self.edges:
            out[w].append(y)
        for x in out:
            out[x] = tuple(sort_values(out[x]))
        return out

    @cached_property
    def decision_nodes(self) -> frozenset:
        return frozenset(w for w, _ in self.edges)

    @cached_property
    def successor_nodes(self) -> frozenset:
        return frozenset(y for _, y in self.edges)

    @cached_property
    def root(self) -> str:
        if self.trivial:
            (r,) = self.nodes
            return r
        (r,) = self.decision_nodes - self.successor_nodes
        return r

    @cached_property
    def end_nodes(self) -> frozenset:
        return self.successor_nodes - self.decision_nodes

    def ancestors(self, x: str) -> list:
        """Nodes strictly before ``x``, nearest first."""
        if x not in self.nodes:
            raise UnknownNodeError(x)
        out = []
        while x in self.parent:
            x = self.parent[x]
            out.append(x)
        return out

    def descendants(self, x: str) -> frozenset:
        """Nodes weakly after ``x``."""
        if x not in self.nodes:
            raise UnknownNodeError(x)
        seen = {x}
        todo = [x]
        while todo:
            for c in self.children[todo.pop()]:
                seen.add(c)
                todo.append(c)
        return frozenset(seen)


def validate_edge_tree(edges: Iterable) -> Optional[Violation]:
    """Check ``[E1]``-``[E3]`` on a set of ordered pairs; first failure wins."""
    edges = _pairs(edges)
    pred: dict = {}
    for w, y in sorted(edges):
        if pred.setdefault(y, w) != w:
            return Violation(
                EdgeAxiom.E1,
                tuple(sorted(e for e in edges if e[1] == y)),
                f"node {y} has more than one predecessor",
            )
    ys = pred.keys()
    for y in sort_values(ys):
        x = y
        for _ in range(len(ys)):
            x = pred[x]
            if x not in ys:
                break
        if x in ys:
            return Violation(EdgeAxiom.E2, (y,), f"predecessor chain from {y} never leaves the successor set")
    starts = {w for w, _ in edges} - set(ys)
    if len(starts) != 1:
        return Violation(EdgeAxiom.E3, tuple(sort_values(starts)), f"W \\ Y = {{{', '.join(sort_values(starts))}}}")
    return None


def orient_divergently(t: RootedTree) -> OutTree:
    edges = set()
    seen = {t.root}
    todo = deque([t.root])
    while todo:
        x = todo.popleft()
        for n in t.neighbours[x]:
            if n not in seen:
                seen.add(n)
                edges.add((x, n))
                todo.append(n)
    return OutTree(t.nodes, edges)


def underlying_rooted(o: OutTree) -> RootedTree:
    return RootedTree(o.nodes, {frozenset(e) for e in o.edges}, o.root)


def out_tree_of(q: QuintupleSet) -> OutTree:
    """``(X, pi_WY(q))``; needs ``[Pw<-y]``, ``[Py]`` and ``[Pr]``."""
    bad = [v for a in (AxiomId.PW_Y, AxiomId.PY, AxiomId.PR) if (v := check_axiom(q, a)) is not None]
    if bad:
        raise AxiomViolationError(bad)
    return OutTree(nodes(q), project(q, "WY").tuples)


class Precedence(enum.Enum):
    """How ``x1`` relates to ``x2`` in an out-tree."""

    STRICTLY = "strictly"  # x1 < x2
    EQUAL = "equal"  # x1 == x2: weak precedence only
    REVERSED = "reversed"  # x2 < x1
    INCOMPARABLE = "incomparable"

    @property
    def weakly(self) -> bool:
        return self in (Precedence.STRICTLY, Precedence.EQUAL)

    @property
    def strictly(self) -> bool:
        return self is Precedence.STRICTLY


def precedes(o: OutTree, x1, x2) -> Precedence:
    x1, x2 = as_atom(x1), as_atom(x2)
    for x in (x1, x2):
        if x not in o.nodes:
            raise UnknownNodeError(x)
    if x1 == x2:
        return Precedence.EQUAL
    if x1 in o.ancestors(x2):
        return Precedence.STRICTLY
    if x2 in o.ancestors(x1):
        return Precedence.REVERSED
    return Precedence.INCOMPARABLE


def weakly_precedes(o: OutTree, x1, x2) -> bool:
    return precedes(o, x1, x2).weakly


def strictly_precedes(o: OutTree, x1, x2) -> bool:
    return precedes(o, x1, x2).strictly


def precedence_pairs(o: OutTree, strict: bool = False) -> frozenset:
    """The precedence order as a set of ``(x1, x2)`` pairs."""
    out = set()
    for x in o.nodes:
        if not strict:
            out.add((x, x))
        for a in o.ancestors(x):
            out.add((a, x))
    return frozenset(out)


def runs(o: OutTree) -> frozenset:
    """One run per end node: the node set of the path from the root."""
    return frozenset(frozenset([y, *o.ancestors(y)]) for y in o.end_nodes)


def run_edges(o: OutTree, run) -> frozenset:
    return frozenset((w, y) for w, y in o.edges if w in run and y in run)
