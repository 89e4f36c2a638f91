import json

import pytest
from dot_grammar import parse_dot

from pentaform import load, root
from pentaform.cli import main


@pytest.fixture
def run(capsys, fixtures_dir):
    def go(*args):
        argv = [str(fixtures_dir / a) if a.endswith(".json") and "/" not in a else a for a in args]
        code = main(argv)
        out = capsys.readouterr()
        return code, out.out, out.err

    return go


def test_validate_pentaform(run):
    code, out, _ = run("validate", "q_tdot.json")
    assert code == 0 and "pentaform: yes" in out


def test_validate_two_roots(run):
    code, out, _ = run("validate", "q_eq1.json")
    assert code == 1
    failing = [line.split()[0] for line in out.splitlines() if "FAIL" in line]
    assert failing == ["[Pr]"]


def test_validate_json(run):
    code, out, _ = run("validate", "q_eq1.json", "--json")
    data = json.loads(out)
    assert code == 1 and data["block"] and not data["pentaform"]
    assert [k for k, ok in data["axioms"].items() if not ok] == ["[Pr]"]


@pytest.mark.parametrize("n, label", [(1, "[Pi<-j]"), (3, "[Pwa]"), (8, "[Pr]")])
def test_validate_table_rows(run, n, label):
    code, out, _ = run("validate", f"single_failure_{n}.json", "--json")
    assert code == 1
    assert [k for k, ok in json.loads(out)["axioms"].items() if not ok] == [label]


def test_recall_witness(run):
    code, out, _ = run("recall", "kidteacher.json")
    assert code == 1 and "y1=2 y2=4 y3=6" in out
    code, out, _ = run("recall", "kidteacher.json", "--json")
    assert json.loads(out)["perfect_recall_witness"] == ["2", "4", "6"]


def test_recall_holds(run):
    code, out, _ = run("recall", "q_tdot.json", "--json")
    assert code == 0 and json.loads(out)["perfect_recall"]


def test_roundtrip_identity(run):
    code, out, _ = run("roundtrip", "fig31_gm.json")
    assert code == 0 and "SP: identity" in out
    assert out.count("pass") == 16


def test_roundtrip_rewritten(run):
    code, out, _ = run("roundtrip", "horse_named_game.json", "--json")
    data = json.loads(out)
    assert code == 1 and data["direction"] == "PS" and data["status"] == "rewritten"


def test_roundtrip_pentaform_side(run):
    code, out, _ = run("roundtrip", "horse_game.json", "--json")
    assert code == 0 and json.loads(out)["status"] == "identity"


def test_info(run):
    code, out, _ = run("info", "q_tdot.json", "--json")
    data = json.loads(out)
    assert code == 0 and data["root"] == "0"
    assert data["I"] == ["Dog", "Kid", "Teacher"]


def test_slice_with_set_situation(run):
    code, out, _ = run("slice", "q_ddot.json", "--situation", "{2,3}")
    assert code == 0 and len(out.splitlines()) == 4


def test_slice_unknown(run):
    code, out, _ = run("slice", "q_ddot.json", "--situation", "nowhere")
    assert code == 1 and "no rows" in out


def test_project(run):
    code, out, _ = run("project", "q_dot.json", "--coords", "WY")
    assert code == 0 and out.splitlines() == ["<0, 1>", "<0, 2>"]


def test_bad_coordinates(run):
    code, _, _ = run("project", "q_dot.json", "--coords", "WQ")
    assert code == 1


def test_tree_dot(run):
    code, out, _ = run("tree", "q_ddot.json", "--dot")
    g = parse_dot(out)
    assert code == 0 and len(g.nodes) == 9 and len(g.edges) == 8


def test_subroots_and_subgame(run):
    code, out, _ = run("subroots", "chain.json", "--json")
    assert code == 0 and json.loads(out)["subroots"] == ["0", "1"]
    code, out, _ = run("subgame", "chain.json", "--at", "1")
    assert code == 0 and out.strip() == "<i, j2, 1, a, 2>"
    code, _, err = run("subgame", "q_tdot.json", "--at", "2")
    assert code == 1 and "subroot" in err


def test_convert_round_trip(run, tmp_path, fixtures_dir):
    pent = tmp_path / "p.json"
    back = tmp_path / "g.json"
    assert run("convert", "fig31_gm.json", "--to", "pentaform", "-o", str(pent))[0] == 0
    assert run("convert", str(pent), "--to", "gm", "-o", str(back))[0] == 0
    assert load(back) == load(fixtures_dir / "fig31_gm.json")
    assert load(pent).kind == "pentaform-game"


def test_union_pair(run, tmp_path):
    out_path = tmp_path / "u.json"
    code, out, _ = run("union", "q_tdot.json", "q_guilty.json", "--mode", "pair", "-o", str(out_path))
    assert code == 0
    assert root(load(out_path).payload) == "0"


def test_union_family_rejected(run):
    code, _, err = run("union", "q_tdot.json", "q_guilty.json", "--mode", "family")
    assert code == 1 and err


def test_union_family(run):
    code, out, _ = run("union", "q_guilty.json", "q_innocent.json", "--mode", "family", "--json")
    assert code == 0 and json.loads(out)["start_nodes"] == ["4", "5", "6", "7"]


def test_missing_file(run):
    code, _, err = run("validate", "/nonexistent/nope.json")
    assert code == 2 and "nope.json" in err


def test_malformed_file(run, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "quintuple-set", "version": "1", "payload": {"rows": [{"i": 1}]}}')
    code, _, err = run("validate", str(bad))
    assert code == 2 and "$.payload.rows[0]" in err


def test_usage_error(run):
    with pytest.raises(SystemExit) as info:
        run("validate")
    assert info.value.code == 2
