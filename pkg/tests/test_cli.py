import json

import pytest

from chromlie.cli import main


@pytest.fixture
def k2(tmp_path):
    path = tmp_path / "k2.txt"
    path.write_text("# single edge\nvertices 2\n1 2\n")
    return str(path)


@pytest.fixture
def p3_json(tmp_path):
    path = tmp_path / "p3.json"
    path.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3]]}))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mult(capsys, k2):
    code, out, _ = run(capsys, "mult", "--graph", k2, "--height", "3", "--out", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["bound"] == 3 and {"exp": [2, 1], "m": "1"} in obj["mults"]


def test_global_flags_before_command(capsys, k2):
    code, out, _ = run(capsys, "--graph", k2, "--out", "json", "chrompoly", "--weights", "2,1")
    assert code == 0
    assert json.loads(out)["coeffs"] == ["0", "1", "-3/2", "1/2"]


def test_csf_routes(capsys, k2):
    code, out, _ = run(capsys, "csf", "--graph", k2, "--weights", "2,1", "--nvars", "3", "--out", "json")
    obj = json.loads(out)
    assert code == 0 and obj["expansion"]["terms"] == [{"exp": [1, 1, 1], "coef": "3"}]
    code, out, _ = run(capsys, "csf", "--graph", k2, "--route", "stanley")
    assert code == 0 and "p[2]" in out
    code, _, err = run(capsys, "csf", "--graph", k2, "--weights", "2,1", "--route", "stanley")
    assert code == 1 and "weights" in err


def test_gsym(capsys, p3_json):
    code, out, _ = run(capsys, "gsym", "--graph", p3_json, "--format", "json", "--kind", "e",
                       "--degree", "2", "--out", "json")
    assert code == 0
    assert json.loads(out)["series"]["terms"] == [{"exp": [1, 0, 1], "num": "1", "den": "1"}]


def test_bondlattice(capsys, p3_json):
    code, out, _ = run(capsys, "bondlattice", "--graph", p3_json, "--format", "json", "--out", "json")
    entries = json.loads(out)
    assert code == 0 and len(entries) == 4
    assert entries[-1] == {"parts": [[1, 1, 1]], "type": [3], "mobius": 1}
    code, out, _ = run(capsys, "bondlattice", "--graph", p3_json, "--format", "json",
                       "--weights", "2,1,1", "--out", "json")
    assert all(e["mobius"] is None for e in json.loads(out))


def test_cache_flag(capsys, k2, tmp_path):
    cache = tmp_path / "cache.json"
    assert run(capsys, "mult", "--graph", k2, "--height", "4", "--cache", str(cache))[0] == 0
    assert cache.exists()
    assert run(capsys, "mult", "--graph", k2, "--height", "3", "--cache", str(cache))[0] == 0


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "join", "--out", "json", "--no-timing")
    assert code == 0 and json.loads(out)["pass"] is True and "wall_time" not in json.loads(out)
    code, out, _ = run(capsys, "verify", "mainthm")
    assert code == 2 and "FAIL" in out
    code, out, _ = run(capsys, "verify", "all", "--budget", "0")
    assert code == 3 and out.count("INDETERMINATE") == 11


@pytest.mark.parametrize("argv", [[], ["bogus"], ["mult"], ["mult", "--graph", "/no/such/file"],
                                  ["gsym", "--kind", "e"]])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_bad_graph_and_weights(capsys, tmp_path, k2):
    bad = tmp_path / "bad.txt"
    bad.write_text("vertices 2\n1 1\n")
    code, _, err = run(capsys, "mult", "--graph", str(bad))
    assert code == 1 and "line 2" in err
    code, _, err = run(capsys, "chrompoly", "--graph", k2, "--weights", "1")
    assert code == 1
    code, _, err = run(capsys, "chrompoly", "--graph", k2, "--weights", "a,b")
    assert code == 1
