from __future__ import annotations

import json

import numpy as np
import pytest

from cremona_lattice import actions as A
from cremona_lattice import cases
from cremona_lattice import lattice as L
from cremona_lattice import tables as T
from cremona_lattice import weyl as W
from cremona_lattice.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name: str, data) -> str:
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_counts(capsys):
    assert run(capsys, "lines", "--degree", "3")[:2] == (0, "27\n")
    assert run(capsys, "roots", "--degree", "3")[:2] == (0, "72\n")
    assert run(capsys, "roots", "--degree", "6")[:2] == (0, "8\n")
    code, out, _ = run(capsys, "lines", "--degree", "1", "--json")
    assert code == 0 and json.loads(out)["count"] == 240


@pytest.mark.parametrize("d", ["0", "9"])
def test_bad_degree(capsys, d):
    code, _, err = run(capsys, "lines", "--degree", d)
    assert code == 2 and "degree" in err


def test_classify_identity(capsys, tmp_path):
    f = write(tmp_path, "id.json", W.Isometry.identity(6).to_json())
    code, out, _ = run(capsys, "classify", f, "--json")
    data = json.loads(out)
    assert code == 0
    assert (data["order"], data["trace"], data["minimal"]) == (1, 6, False)


def test_classify_rotation(capsys, tmp_path):
    f = write(tmp_path, "rot.json", cases.hexagon_rotation().to_json())
    code, out, _ = run(capsys, "classify", f, "--json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 3 and data["trace_pic"] == 1 and data["lefschetz"] == 3


def test_classify_table_label(capsys, tmp_path):
    f = write(tmp_path, "w.json", W.carter_representative("E6", "A1xA5").to_json())
    code, out, _ = run(capsys, "classify", f)
    assert code == 0 and "A1xA5" in out and "(t+1)(t^5+t^4+t^3+t^2+t+1)" in out


def test_classify_rejects_non_isometry(capsys, tmp_path):
    m = np.eye(7, dtype=int)
    m[0, 0] = 2
    f = write(tmp_path, "bad.json", {"r": 6, "matrix": m.tolist()})
    code, _, err = run(capsys, "classify", f)
    assert code == 2 and "intersection form" in err
    m = -np.eye(7, dtype=int)
    f = write(tmp_path, "bad2.json", {"r": 6, "matrix": m.tolist()})
    code, _, err = run(capsys, "classify", f)
    assert code == 2 and "canonical class" in err
    code, _, err = run(capsys, "classify", str(tmp_path / "missing.json"))
    assert code == 2


def test_action_examples(capsys, tmp_path):
    sigma = W.reflection(L.simple_roots(3)[0])
    f = write(tmp_path, "a.json", A.ActionSpec(3, (cases.hexagon_rotation(),), sigma).to_json())
    code, out, _ = run(capsys, "action", f, "--json")
    data = json.loads(out)
    assert code == 0 and data["invariant_rank"] == 1 == data["invariant_rank_oracle"]

    f = write(tmp_path, "b.json", A.ActionSpec(4, (cases.pentagon_element(),)).to_json())
    data = json.loads(run(capsys, "action", f, "--json")[1])
    assert data["invariant_rank"] == 1 and data["orbit_sizes"] == [5, 5]

    f = write(tmp_path, "c.json", {"r": 4, "generators": [], "sigma": None})
    data = json.loads(run(capsys, "action", f, "--json")[1])
    assert data["invariant_rank"] == 5


def test_action_errors(capsys, tmp_path):
    edge = W.reflection(L.vec(3, 0, 1, -1, 0))
    spec = {"r": 3, "generators": [[list(r) for r in cases.hexagon_rotation().matrix]],
            "sigma": [list(r) for r in edge.matrix]}
    code, _, err = run(capsys, "action", write(tmp_path, "x.json", spec))
    assert code == 2 and "commute" in err
    big = {"r": 6, "generators": [[list(r) for r in s.matrix] for s in W.simple_reflections(6)], "sigma": None}
    code, _, err = run(capsys, "action", write(tmp_path, "y.json", big), "--cap", "500")
    assert code == 3


def test_verify(capsys):
    assert run(capsys, "verify", "--suite", "dp4")[0] == 0
    code, _, err = run(capsys, "verify", "--suite", "nosuch")
    assert code == 2 and "nosuch" in err
    code, _, err = run(capsys, "verify", "--suite", "dp2", "--strict")
    assert code == 3 and "--allow-large" in err


def test_verify_json_matches_human(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dp5", "--json")
    data = json.loads(out)
    code2, human, _ = run(capsys, "verify", "--suite", "dp5")
    assert code == code2 == 0
    n = len(data[0]["claims"])
    assert f"{n}/{n} claims" in human


def test_emit_tables(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dp4", "--emit-tables")
    assert code == 0
    blocks = {}
    current = None
    for line in out.splitlines():
        if line.startswith("# table"):
            current = line.split(":")[0].split()[-1]
            blocks[current] = []
        elif current and line and not line.startswith(("degree", "label")):
            blocks[current].append(line.split("\t"))
    assert set(blocks) == {"1", "2", "4", "6", "7", "8", "9"}
    assert {int(d): int(n) for d, n in blocks["1"]} == T.MINUS_ONE_COUNTS
    for num, rows in (("4", T.E6_TABLE), ("8", T.E7_TABLE), ("9", T.E8_ORDER6_TABLE), ("7", T.E8_ORDER3_TABLE)):
        assert [(l, c, int(t)) for l, c, t, _ in blocks[num]] == [(r.label, r.charpoly, r.computed_trace) for r in rows]
    assert len(blocks["8"]) == 29


def test_surfaces(capsys):
    code, out, _ = run(capsys, "surfaces", "verify", "--example", "tau0", "--json")
    assert code == 0 and json.loads(out)[0]["passed"]
    assert run(capsys, "surfaces", "verify", "--example", "g0", "--symbolic")[0] == 0
    assert run(capsys, "surfaces", "verify", "--example", "nope")[0] == 2


def test_group(capsys):
    code, out, _ = run(capsys, "group", "--type", "E6", "--json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 51840 and len(data["classes"]) == 15
    assert run(capsys, "group", "--type", "E7")[0] == 3
    assert run(capsys, "group", "--type", "E8")[0] == 3


def test_graph(capsys):
    code, out, _ = run(capsys, "graph", "--degree", "5")
    assert code == 0 and out.count("--") == 15
    code, out, _ = run(capsys, "graph", "--degree", "6", "--format", "json")
    assert code == 0 and len(json.loads(out)["vertices"]) == 6


def test_missing_command(capsys):
    assert run(capsys)[0] == 2
