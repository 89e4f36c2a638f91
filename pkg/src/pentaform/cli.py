"""Command-line interface.

Exit status is 0 on success, 1 when a check fails or the input is
semantically invalid for the command, and 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Optional, Sequence

from . import analysis, game
from .axioms import validate
from .errors import PentaformError, SchemaError
from .io import Document, DuplicateRowWarning, export_dot, load, serialize
from .relation import (
    QuintupleSet,
    as_value,
    components,
    end_nodes,
    format_value,
    project,
    slice_of,
    slice_partition,
    sort_values,
    start_nodes,
)

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _value_arg(text: str):
    """``{2,3}`` names a node-set situation; anything else is an atom."""
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        return as_value({p.strip() for p in text[1:-1].split(",") if p.strip()})
    return as_value(text)


def _quintuples(doc: Document) -> QuintupleSet:
    p = doc.payload
    if isinstance(p, QuintupleSet):
        return p
    if isinstance(p, game.PentaformGame):
        return p.q
    return game.pentaform_of(p).q


def _rows_json(q: QuintupleSet) -> list:
    return [[_jv(v) for v in row] for row in q]


def _jv(v):
    return v if isinstance(v, str) else sorted(v)


def _fmt_set(values) -> str:
    return "{" + ", ".join(format_value(v) for v in sort_values(values)) + "}"


def _write(out: Optional[str], data: bytes) -> None:
    if out is None or out == "-":
        sys.stdout.write(data.decode("utf-8"))
    else:
        with open(out, "wb") as fh:
            fh.write(data)


class Reporter:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}
        self.text: list = []

    def emit(self) -> None:
        if self.as_json:
            print(json.dumps(self.data, indent=2, sort_keys=True, ensure_ascii=False))
        else:
            for line in self.text:
                print(line)


# -- subcommands -------------------------------------------------------------


def cmd_validate(args, rep: Reporter) -> int:
    doc = load(args.file)
    p = doc.payload
    if isinstance(p, game.GmGame):
        bad = game.validate_gm(p)
        rep.text.extend(str(v) for v in bad)
    else:
        report = validate(_quintuples(doc))
        rep.data["axioms"] = {a.label: (v is None) for a, v in report.results.items()}
        rep.data["block"] = report.is_block
        rep.data["pentaform"] = report.is_pentaform
        rep.text.extend(report.lines())
        bad = report.violations
        if isinstance(p, game.PentaformGame) and report.is_pentaform:
            bad = game.validate_pentaform_game(p)
            rep.text.extend(str(v) for v in bad)
    rep.data["valid"] = not bad
    rep.data["violations"] = [str(v) for v in bad]
    rep.text.append(f"{doc.kind}: {'valid' if not bad else 'invalid'}")
    return OK if not bad else FAILED


def cmd_info(args, rep: Reporter) -> int:
    q = _quintuples(load(args.file))
    c = components(q)
    rep.data.update({k: sorted(_jv(v) for v in getattr(c, k)) for k in "IJWAY"})
    starts = start_nodes(q)
    rep.data["start_nodes"] = sorted(starts)
    rep.data["end_nodes"] = sorted(end_nodes(q))
    rep.data["root"] = next(iter(starts)) if len(starts) == 1 else None
    info = {format_value(j): sorted({r.w for r in s.rows}) for j, s in slice_partition(q).items()}
    feas = project(q, "WA")
    rep.data["information_sets"] = info
    rep.data["feasible"] = {w: sorted(feas.image(w)) for w in sort_values(c.W)}
    for k in "IJWAY":
        rep.text.append(f"{k}: {_fmt_set(getattr(c, k))}")
    rep.text.append(f"root: {rep.data['root'] if rep.data['root'] is not None else '(none)'}")
    rep.text.append(f"start nodes: {_fmt_set(starts)}")
    rep.text.append(f"end nodes: {_fmt_set(end_nodes(q))}")
    rep.text.append("information sets:")
    rep.text.extend(f"  {j}: {{{', '.join(ws)}}}" for j, ws in info.items())
    rep.text.append("feasible actions:")
    rep.text.extend(f"  {w}: {{{', '.join(a)}}}" for w, a in rep.data["feasible"].items())
    return OK


def cmd_slice(args, rep: Reporter) -> int:
    q = _quintuples(load(args.file))
    s = slice_of(q, _value_arg(args.situation))
    rep.data["rows"] = _rows_json(s)
    rep.text.extend(str(r) for r in s)
    if not s:
        rep.text.append(f"no rows with situation {args.situation}")
        return FAILED
    return OK


def cmd_project(args, rep: Reporter) -> int:
    q = _quintuples(load(args.file))
    rel = project(q, args.coords)
    rep.data["coords"] = "".join(rel.coords)
    rep.data["tuples"] = [[_jv(v) for v in t] for t in rel]
    rep.text.extend("<" + ", ".join(format_value(v) for v in t) + ">" for t in rel)
    return OK


def cmd_tree(args, rep: Reporter) -> int:
    q = _quintuples(load(args.file))
    dot = export_dot(q)
    if args.dot and args.dot != "-":
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
        rep.text.append(f"wrote {args.dot}")
    else:
        rep.text.append(dot.rstrip("\n"))
    rep.data["dot"] = dot
    return OK


def cmd_convert(args, rep: Reporter) -> int:
    doc = load(args.file)
    p = doc.payload
    if args.to == "gm":
        if isinstance(p, game.GmGame):
            raise UsageError("input is already a gm-game")
        if isinstance(p, QuintupleSet):
            raise UsageError("converting needs a game, not a bare quintuple set")
        out = Document("gm-game", game.standardize(p))
    else:
        if not isinstance(p, game.GmGame):
            raise UsageError("--to pentaform needs a gm-game input")
        out = Document("pentaform-game", game.pentaform_of(p))
    data = serialize(out)
    if args.output:
        _write(args.output, data)
        rep.text.append(f"wrote {args.output}")
    else:
        rep.text.append(data.decode("utf-8").rstrip("\n"))
    rep.data["document"] = json.loads(data)
    return OK


def cmd_roundtrip(args, rep: Reporter) -> int:
    doc = load(args.file)
    p = doc.payload
    if isinstance(p, QuintupleSet):
        raise UsageError("roundtrip needs a game document")
    report = game.roundtrip_check(p)
    rep.data["direction"] = report.direction
    rep.data["status"] = report.status.value
    rep.data["mismatch"] = report.mismatch
    rep.text.append(f"{report.direction}: {report.status.value}" + (f" ({report.mismatch})" if report.mismatch else ""))
    ok = report.ok
    if isinstance(p, game.GmGame):
        battery = game.equality_battery(p)
        rep.data["battery"] = battery
        for name, passed in battery.items():
            rep.text.append(f"  {name:40} {'pass' if passed else 'FAIL'}")
        ok = ok and all(battery.values())
    return OK if ok else FAILED


def cmd_subroots(args, rep: Reporter) -> int:
    t = analysis.subroots(_quintuples(load(args.file)))
    rep.data["subroots"] = sort_values(t)
    rep.text.append(_fmt_set(t))
    return OK


def cmd_subgame(args, rep: Reporter) -> int:
    sub = analysis.subgame(_quintuples(load(args.file)), args.at)
    rep.data["rows"] = _rows_json(sub)
    rep.text.extend(str(r) for r in sub)
    return OK


def cmd_union(args, rep: Reporter) -> int:
    qs = [_quintuples(load(f)) for f in args.files]
    if args.mode == "pair":
        if len(qs) != 2:
            raise UsageError("--mode pair needs exactly two files")
        res = analysis.union_pair(*qs)
        q, starts, ends = res.q, res.start_nodes, res.end_nodes
    elif args.mode == "family":
        res = analysis.union_family(qs)
        q, starts, ends = res.q, res.start_nodes, res.end_nodes
    else:
        q = analysis.union_chain(qs)
        starts, ends = start_nodes(q), end_nodes(q)
    pentaform = validate(q).is_pentaform
    rep.data.update(
        rows=_rows_json(q), start_nodes=sort_values(starts), end_nodes=sort_values(ends), pentaform=pentaform
    )
    if args.output:
        _write(args.output, serialize(Document("quintuple-set", q)))
    rep.text.extend(str(r) for r in q)
    rep.text.append(f"start nodes: {_fmt_set(starts)}")
    rep.text.append(f"end nodes: {_fmt_set(ends)}")
    rep.text.append(f"pentaform: {'yes' if pentaform else 'no'}")
    return OK


def cmd_recall(args, rep: Reporter) -> int:
    q = _quintuples(load(args.file))
    pr = analysis.check_perfect_recall(q)
    am = analysis.check_no_absentmindedness(q)
    rep.data["perfect_recall"] = pr is None
    rep.data["perfect_recall_witness"] = None if pr is None else list(pr)
    rep.data["no_absentmindedness"] = am is None
    rep.data["absentmindedness_witness"] = None if am is None else [am.y1, am.y2]
    rep.text.append("perfect recall: " + ("yes" if pr is None else f"no, y1={pr.y1} y2={pr.y2} y3={pr.y3}"))
    rep.text.append("no absentmindedness: " + ("yes" if am is None else f"no, y1={am.y1} y2={am.y2}"))
    return OK if pr is None and am is None else FAILED


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="pentaform", description="Inspect and transform pentaform games.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the axioms (or Gm conditions)").add_argument("file")
    add("info", cmd_info, "summarize components, root and information sets").add_argument("file")

    p = add("slice", cmd_slice, "rows of one situation")
    p.add_argument("file")
    p.add_argument("--situation", required=True, help="an atom, or {a,b} for a node set")

    p = add("project", cmd_project, "project onto coordinates")
    p.add_argument("file")
    p.add_argument("--coords", required=True, help="e.g. JI or WA")

    p = add("tree", cmd_tree, "export the tree as Graphviz DOT")
    p.add_argument("file")
    p.add_argument("--dot", nargs="?", const="-", metavar="OUT", help="output path (default: stdout)")

    p = add("convert", cmd_convert, "standardize or pentaform a game")
    p.add_argument("file")
    p.add_argument("--to", required=True, choices=("gm", "pentaform"))
    p.add_argument("-o", "--output")

    add("roundtrip", cmd_roundtrip, "check the P/S round trip and equality battery").add_argument("file")
    add("subroots", cmd_subroots, "list subgame roots").add_argument("file")

    p = add("subgame", cmd_subgame, "extract the subgame at a subroot")
    p.add_argument("file")
    p.add_argument("--at", required=True)

    p = add("union", cmd_union, "compose blocks")
    p.add_argument("files", nargs="+")
    p.add_argument("--mode", choices=("pair", "family", "chain"), default="pair")
    p.add_argument("-o", "--output")

    add("recall", cmd_recall, "perfect recall and absentmindedness").add_argument("file")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Reporter(args.json)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DuplicateRowWarning)
            code = args.func(args, rep)
    except (OSError, SchemaError, UsageError) as exc:
        print(f"pentaform {args.command}: {exc}", file=sys.stderr)
        return USAGE
    except (PentaformError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        if args.json:
            rep.data["error"] = str(msg)
            rep.emit()
        print(f"pentaform {args.command}: {type(exc).__name__}: {msg}", file=sys.stderr)
        return FAILED
    rep.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
