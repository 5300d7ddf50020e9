from __future__ import annotations

import json

import pytest

from mcgjohnson import braid as br
from mcgjohnson import mcg
from mcgjohnson.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_ranks_genus_five(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ranks", "--genus", "5")
    assert code == 0
    assert "r(5,2)=10" in out


def test_verify_exact_seq_genus_one(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "exact-seq", "--genus", "1")
    assert code == 0 and "PASS" in out


def test_verify_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "kernel-K", "--genus", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass" and data["parameters"]["genus"] == 3
    assert json.loads(json.dumps(data)) == data
    assert all(c["status"] in ("pass", "fail", "skipped") for c in data["checks"])


def test_usage_and_budget_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2
    capsys.readouterr()
    code, _, err = run(capsys, "verify", "--suite", "jcom", "--genus", "9")
    assert code == 2 and "genus" in err
    code, _, _ = run(capsys, "ranks", "--genus", "9")
    assert code == 2


def test_invalid_input_files(tmp_path, capsys):
    code, _, _ = run(capsys, "invariants", str(tmp_path / "missing.json"))
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"genus": 2, "images": {"x1": "x1 x1"}}')
    code, _, err = run(capsys, "invariants", str(bad))
    assert code == 2 and "determinant" in err
    bad.write_text("[1, 2]")
    assert run(capsys, "invariants", str(bad))[0] == 2


def _invariants(tmp_path, capsys, record):
    path = tmp_path / "in.json"
    path.write_text(json.dumps(record))
    code, out, _ = run(capsys, "invariants", str(path), "--cutoff", "4", "--json")
    assert code == 0
    return json.loads(out)


def test_identity_invariants_are_trivial(tmp_path, capsys):
    rep = _invariants(tmp_path, capsys, mcg.FreeEndo.identity(2).to_json())
    assert rep["torelli"] and rep["fixes_L"]
    assert rep["tau"]["value"] == "0"
    assert rep["extended_J"]["zero"]
    assert rep["weight_degree"] == "identity"
    assert all(v["value"] == "0" for v in rep["J_n"].values())


def test_kappa_invariants(tmp_path, capsys):
    rep = _invariants(tmp_path, capsys, br.kappa(br.artin_generator(2, 1, 2)).to_json())
    assert rep["torelli"] and rep["tau"]["value"] == "0"
    assert rep["weight_degree"] == 2
    assert mcg.FreeEndo.from_json(rep["input"]) == br.kappa(br.artin_generator(2, 1, 2))


def test_psi_and_braid_invariants(tmp_path, capsys):
    rep = _invariants(tmp_path, capsys, br.psi(br.artin_generator(2, 1, 2)).to_json())
    assert rep["fixes_L"] and rep["extended_J"]["zero"] and not rep["torelli"]
    assert rep["symplectic_matrix"] == [[1, 0, 0, 1], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    rep = _invariants(tmp_path, capsys, {"strands": 3, "word": "A12 A13 A12^-1 A13^-1"})
    assert rep["weight_degree"] == 2 and rep["J_b"] != "0"
    assert rep["psi"]["torelli"] and rep["kappa"]["tau"]["value"] == "0"


def test_ranks_table(capsys):
    code, out, _ = run(capsys, "ranks", "--genus", "3", "--max-degree", "5", "--json")
    assert code == 0
    rows = {(r["g"], r["n"]): r for r in json.loads(out)}
    assert rows[(3, 3)]["difference"] == 4
    assert rows[(3, 4)]["difference"] == 3
    assert rows[(2, 3)]["difference"] == 1
    assert rows[(3, 1)]["rank_K"] == 16
    code, out, _ = run(capsys, "ranks", "--genus", "2", "--max-degree", "3")
    assert code == 0 and "rank_ker_b" in out
