import json

import pytest

from braidlk.cli import main
from braidlk.invariant import FreeAbelianValue

A1 = "-2 -1 -1 -2 1 1 2 1 1 2 -1 -1"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariant_empty(capsys):
    code, out, _ = run(capsys, "invariant", "--word", "", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["i_lk"] == {"X": {"0": 2}} and data["G"] == 0


def test_invariant_a1(capsys):
    code, out, _ = run(capsys, "invariant", "--word", A1)
    assert code == 0 and "G:     4" in out
    code, out, _ = run(capsys, "invariant", "--word", A1, "--format", "jsonl")
    data = json.loads(out)
    assert FreeAbelianValue.from_json(data["i_lk"]) == FreeAbelianValue.from_json(
        {"X": {"-2": 1, "-1": 1, "0": 4, "2": 2}, "Y": {"0": 1, "1": 3, "2": 2}}
    )
    assert list(data["i_lk"]["X"]) == ["-2", "-1", "0", "2"]


@pytest.mark.parametrize("word", ["1 2 1", "1 2", "1 0", "x"])
def test_invariant_invalid(capsys, word):
    code, _, err = run(capsys, "invariant", "--word", word)
    assert code == 2 and "invalid input" in err


def test_word_file(capsys, tmp_path):
    p = tmp_path / "a1.txt"
    p.write_text(A1 + "\n")
    code, out, _ = run(capsys, "invariant", "--word-file", str(p), "--format", "json")
    assert code == 0 and json.loads(out)["G"] == 4
    code, _, _ = run(capsys, "invariant", "--word-file", str(tmp_path / "missing"))
    assert code == 2


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["family", "a", "--k", "1"], A1),
        (["family", "V"], "1 1"),
        (["family", "b"], "-2 -1 -1 -2 2 1 1 2 1 1 -1 -1"),
        (["--k", "1", "family", "a"], A1),
    ],
)
def test_family(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_usage_errors(capsys):
    assert run(capsys, "family", "a", "--k", "0")[0] == 1
    assert run(capsys, "family", "c")[0] == 1
    assert run(capsys)[0] == 1
    assert run(capsys, "verify", "bogus")[0] == 1


def test_slide(capsys, tmp_path):
    trace = tmp_path / "t.jsonl"
    code, out, _ = run(capsys, "slide", "--k", "1", "--trace", str(trace))
    assert code == 0 and "4 braid moves" in out and "-1 x4" in out
    lines = [json.loads(x) for x in trace.read_text().splitlines()]
    assert len(lines) == 4
    assert lines[0] == {"step": 1, "move": "braid@6:LU", "word": "-2 -1 -1 -2 1 2 1 2 1 2 -1 -1", "G": 3}
    assert lines[-1]["G"] == 0
    code, out, _ = run(capsys, "slide", "--k", "3", "--format", "json")
    data = json.loads(out)
    assert data["braid_moves"] == 36 and data["delta_G"] == {"-1": 36} and data["pass"]


def test_slide_jsonl_stdout(capsys):
    code, out, _ = run(capsys, "slide", "--k", "2", "--format", "jsonl")
    assert code == 0 and len(out.splitlines()) == 16


def test_distance_certified(capsys):
    code, out, _ = run(capsys, "distance", "--a", A1, "--b", "", "--max-len", "16", "--max-cost", "6", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["lower_bound"] == 4 and data["upper"] == 4 and data["certified_exact"]
    assert "within caps" in data["caveat"]


def test_distance_without_bound(capsys):
    code, out, _ = run(capsys, "distance", "--a", "1 2 1", "--b", "2 1 2")
    assert code == 0
    assert "upper (search): 1" in out and "unavailable" in out and "not a knot" in out


def test_distance_none_found(capsys):
    code, out, _ = run(capsys, "distance", "--a", "1", "--b", "2")
    assert code == 0 and "none found within caps" in out


def test_distance_invalid(capsys):
    assert run(capsys, "distance", "--a", "1 0", "--b", "")[0] == 2
    assert run(capsys, "distance", "--a", "1", "--b", "1", "--n", "4", "--max-len", "3")[0] == 0


def test_distance_trace(capsys, tmp_path):
    trace = tmp_path / "d.jsonl"
    run(capsys, "distance", "--a", A1, "--b", "", "--max-len", "14", "--max-cost", "5", "--trace", str(trace))
    recs = [json.loads(x) for x in trace.read_text().splitlines()]
    assert recs[-1]["word"] == "" and sum(r["move"].startswith("braid") for r in recs) == 4


def test_verify_formula(capsys):
    code, out, _ = run(capsys, "verify", "formula", "--k-max", "10")
    assert code == 0 and "10/10" in out


def test_verify_family_csv(capsys):
    code, out, _ = run(capsys, "verify", "family", "--k-max", "4", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "k,len_a,G_a,4k2,pass"
    assert lines[2] == "2,24,16,16,True"


def test_verify_moves_reproducible(capsys, tmp_path):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "verify", "moves", "--trials", "40", "--seed", "7", "--format", "json")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    data = json.loads(outs[0])
    assert data["checks"][0]["attempted"] == 160 and data["checks"][0]["passing"] == 160


def test_verify_out_file(capsys, tmp_path):
    p = tmp_path / "v.jsonl"
    code, out, _ = run(capsys, "verify", "base", "--out", str(p), "--format", "jsonl")
    assert code == 0 and out == ""
    assert all(json.loads(x)["passed"] for x in p.read_text().splitlines())


def test_verify_remark_fails_with_exit_3(capsys):
    code, out, _ = run(capsys, "verify", "remark", "--k-max", "2")
    assert code == 3 and "[FAIL]" in out and "[PASS]" in out
