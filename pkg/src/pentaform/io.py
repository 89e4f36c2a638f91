"""JSON documents for quintuple sets and games, plus Graphviz DOT export.

Every document is ``{"kind": ..., "version": "1", "payload": ...}``.  Output
is canonical: rows, sets and utility entries are sorted, keys are sorted,
and equal structures always serialize to identical bytes.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .errors import SchemaError
from .game import GmGame, PentaformGame, extended_real
from .relation import QuintupleSet, format_value, slice_partition, value_key
from .tree import out_tree_of

VERSION = "1"
KINDS = ("quintuple-set", "pentaform-game", "gm-game")
_TYPES = {"quintuple-set": QuintupleSet, "pentaform-game": PentaformGame, "gm-game": GmGame}


class DuplicateRowWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Union[QuintupleSet, PentaformGame, GmGame]
    version: str = VERSION

    def __post_init__(self):
        if self.kind not in _TYPES:
            raise ValueError(f"unknown document kind {self.kind!r}")
        if not isinstance(self.payload, _TYPES[self.kind]):
            raise TypeError(f"{self.kind} document needs a {_TYPES[self.kind].__name__} payload")

    @classmethod
    def of(cls, obj) -> Document:
        for kind, typ in _TYPES.items():
            if isinstance(obj, typ):
                return cls(kind, obj)
        raise TypeError(f"cannot wrap {type(obj).__name__} in a document")


# -- encoding ----------------------------------------------------------------


def _enc_value(v) -> dict:
    if isinstance(v, str):
        return {"atom": v}
    return {"set": sorted(v)}


def _enc_number(x: float):
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if float(x).is_integer():
        return int(x)
    return x


def _enc_rows(q: QuintupleSet) -> list:
    return [{k: _enc_value(v) for k, v in zip("ijway", row)} for row in q]


def _enc_utility(u: dict) -> list:
    out = []
    for i in sorted(u, key=value_key):
        for run in sorted(u[i], key=sorted):
            out.append({"player": _enc_value(i), "run": sorted(run), "value": _enc_number(u[i][run])})
    return out


def _encode(doc: Document) -> dict:
    p = doc.payload
    if isinstance(p, QuintupleSet):
        payload = {"rows": _enc_rows(p)}
    elif isinstance(p, PentaformGame):
        payload = {"rows": _enc_rows(p.q), "utility": _enc_utility(p.u)}
    else:
        payload = {
            "nodes": sorted(p.nodes),
            "edges": [list(e) for e in sorted(p.edges)],
            "information_sets": [sorted(h) for h in sorted(p.info_sets, key=sorted)],
            "labels": [{"edge": list(e), "action": p.labels[e]} for e in sorted(p.labels)],
            "control": [{"node": w, "player": _enc_value(p.control[w])} for w in sorted(p.control)],
            "utility": _enc_utility(p.u),
        }
    return {"kind": doc.kind, "version": doc.version, "payload": payload}


def serialize(doc: Document) -> bytes:
    text = json.dumps(_encode(doc), sort_keys=True, indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


# -- decoding ----------------------------------------------------------------


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise SchemaError(path, message)


def _obj(x, path: str, keys: tuple) -> dict:
    _expect(isinstance(x, dict), path, "expected an object")
    missing = [k for k in keys if k not in x]
    _expect(not missing, path, f"missing key {missing[0]!r}" if missing else "")
    extra = sorted(set(x) - set(keys))
    _expect(not extra, path, f"unexpected key {extra[0]!r}" if extra else "")
    return x


def _list(x, path: str) -> list:
    _expect(isinstance(x, list), path, "expected an array")
    return x


def _atom(x, path: str) -> str:
    _expect(isinstance(x, str) and x != "", path, "expected a nonempty string")
    return x


def _dec_value(x, path: str, atom_only: bool = False):
    _expect(isinstance(x, dict) and len(x) == 1, path, 'expected {"atom": ...} or {"set": [...]}')
    if "atom" in x:
        return _atom(x["atom"], path + ".atom")
    _expect("set" in x, path, 'expected {"atom": ...} or {"set": [...]}')
    _expect(not atom_only, path, "nodes and actions must be atoms")
    items = _list(x["set"], path + ".set")
    return frozenset(_atom(a, f"{path}.set[{k}]") for k, a in enumerate(items))


def _dec_rows(x, path: str) -> QuintupleSet:
    rows = []
    for k, r in enumerate(_list(x, path)):
        rp = f"{path}[{k}]"
        _obj(r, rp, ("i", "j", "w", "a", "y"))
        rows.append(
            (
                _dec_value(r["i"], rp + ".i"),
                _dec_value(r["j"], rp + ".j"),
                _dec_value(r["w"], rp + ".w", atom_only=True),
                _dec_value(r["a"], rp + ".a", atom_only=True),
                _dec_value(r["y"], rp + ".y", atom_only=True),
            )
        )
    q = QuintupleSet(rows)
    if len(q) != len(rows):
        warnings.warn(f"{path}: {len(rows) - len(q)} duplicate row(s) dropped", DuplicateRowWarning, stacklevel=3)
    return q


def _dec_number(x, path: str) -> float:
    _expect(not isinstance(x, bool) and isinstance(x, (int, float, str)), path, "expected a number, 'inf' or '-inf'")
    try:
        return extended_real(x)
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from None


def _dec_utility(x, path: str) -> dict:
    u: dict = {}
    for k, e in enumerate(_list(x, path)):
        ep = f"{path}[{k}]"
        _obj(e, ep, ("player", "run", "value"))
        i = _dec_value(e["player"], ep + ".player")
        run = frozenset(_atom(n, f"{ep}.run[{m}]") for m, n in enumerate(_list(e["run"], ep + ".run")))
        per = u.setdefault(i, {})
        _expect(run not in per, ep, f"duplicate utility entry for player {format_value(i)}")
        per[run] = _dec_number(e["value"], ep + ".value")
    return u


def _dec_pair(x, path: str) -> tuple:
    items = _list(x, path)
    _expect(len(items) == 2, path, "expected a [from, to] pair")
    return (_atom(items[0], path + "[0]"), _atom(items[1], path + "[1]"))


def _dec_gm(p: dict, path: str) -> GmGame:
    _obj(p, path, ("nodes", "edges", "information_sets", "labels", "control", "utility"))
    nodes = frozenset(_atom(n, f"{path}.nodes[{k}]") for k, n in enumerate(_list(p["nodes"], path + ".nodes")))
    edges = frozenset(_dec_pair(e, f"{path}.edges[{k}]") for k, e in enumerate(_list(p["edges"], path + ".edges")))
    info = []
    for k, h in enumerate(_list(p["information_sets"], path + ".information_sets")):
        hp = f"{path}.information_sets[{k}]"
        info.append(frozenset(_atom(n, f"{hp}[{m}]") for m, n in enumerate(_list(h, hp))))
    labels = {}
    for k, e in enumerate(_list(p["labels"], path + ".labels")):
        ep = f"{path}.labels[{k}]"
        _obj(e, ep, ("edge", "action"))
        edge = _dec_pair(e["edge"], ep + ".edge")
        _expect(edge not in labels, ep, "edge labeled twice")
        labels[edge] = _atom(e["action"], ep + ".action")
    control = {}
    for k, e in enumerate(_list(p["control"], path + ".control")):
        ep = f"{path}.control[{k}]"
        _obj(e, ep, ("node", "player"))
        w = _atom(e["node"], ep + ".node")
        _expect(w not in control, ep, "node controlled twice")
        control[w] = _dec_value(e["player"], ep + ".player")
    return GmGame(nodes, edges, frozenset(info), labels, control, _dec_utility(p["utility"], path + ".utility"))


def parse(data: bytes) -> Document:
    """Decode a document; raises :class:`SchemaError` with a JSON path."""
    try:
        raw = json.loads(data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError("$", f"not valid UTF-8 JSON: {exc}") from None
    _obj(raw, "$", ("kind", "version", "payload"))
    kind = raw["kind"]
    _expect(kind in KINDS, "$.kind", f"expected one of {', '.join(KINDS)}")
    _expect(raw["version"] == VERSION, "$.version", f"unsupported version {raw['version']!r}")
    p = raw["payload"]
    if kind == "quintuple-set":
        _obj(p, "$.payload", ("rows",))
        payload = _dec_rows(p["rows"], "$.payload.rows")
    elif kind == "pentaform-game":
        _obj(p, "$.payload", ("rows", "utility"))
        payload = PentaformGame(_dec_rows(p["rows"], "$.payload.rows"), _dec_utility(p["utility"], "$.payload.utility"))
    else:
        payload = _dec_gm(p, "$.payload")
    return Document(kind, payload)


def load(path) -> Document:
    return parse(Path(path).read_bytes())


def dump(doc: Document, path) -> None:
    Path(path).write_bytes(serialize(doc))


# -- DOT ---------------------------------------------------------------------


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def export_dot(q: QuintupleSet, name: str = "pentaform") -> str:
    """A DOT digraph of the tree of ``q``: one node per element, one edge per row.

    Decision nodes carry their player and situation; information sets with more
    than one node are drawn as dashed clusters.
    """
    tree = out_tree_of(q)
    who: dict = {}
    for row in q:
        who.setdefault(row.w, (row.i, row.j))
    lines = [f"digraph {_quote(name)} {{", "  rankdir=TB;", "  node [shape=circle];"]
    for x in sorted(tree.nodes, key=value_key):
        if x in who:
            i, j = who[x]
            label = f"{x}\n{format_value(i)} @ {format_value(j)}"
            lines.append(f"  {_quote(x)} [label={_quote(label)}];")
        else:
            lines.append(f"  {_quote(x)} [shape=point, xlabel={_quote(x)}];")
    for row in q:
        lines.append(f"  {_quote(row.w)} -> {_quote(row.y)} [label={_quote(row.a)}];")
    k = 0
    for j, s in slice_partition(q).items():
        ws = sorted({r.w for r in s.rows}, key=value_key)
        if len(ws) < 2:
            continue
        lines.append(f"  subgraph {_quote(f'cluster_{k}')} {{")
        lines.append("    style=dashed;")
        lines.append(f"    label={_quote(format_value(j))};")
        for w in ws:
            lines.append(f"    {_quote(w)};")
        lines.append("  }")
        k += 1
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "Document",
    "DuplicateRowWarning",
    "KINDS",
    "VERSION",
    "dump",
    "export_dot",
    "load",
    "parse",
    "serialize",
]
