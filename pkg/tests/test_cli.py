import json

import pytest

from cartanshift import cli


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_shift_and_invariants(tmp_path, capsys):
    f = write(tmp_path, "de.json", {"n": 4, "facets": [[1, 2], [3, 4]]})
    for extra in ([], ["--op", "s"], ["--order", "lex"]):
        code, out, _ = run(capsys, "shift", f, *extra)
        assert code == 0
        assert json.loads(out) == {"n": 4, "facets": [[1], [2, 4], [3, 4]]}
    code, out, _ = run(capsys, "invariants", f)
    data = json.loads(out)
    assert code == 0 and data["degrees"] == {"deg": 2, "adeg_i": [0, 0, 2], "adeg": 2, "sdeg": 3}
    assert data["h_triangle"]["2,2"] == -1 and not data["sequentially_cohen_macaulay"]


def test_gin_and_cartan_betti(tmp_path, capsys):
    f = write(tmp_path, "j.json", {"n": 3, "ring": "exterior", "generators": [[1, 3]]})
    code, out, _ = run(capsys, "gin", f)
    assert code == 0 and json.loads(out)["generators"] == [[1, 2]]
    s = write(tmp_path, "s.json", {"n": 3, "ring": "symmetric", "generators": [[1, 1, 1]]})
    code, out, _ = run(capsys, "gin", s)
    assert code == 0 and json.loads(out)["generators"] == [[3, 0, 0]]
    assert run(capsys, "gin", s, "--order", "lex")[0] == cli.EXIT_INPUT
    e12 = write(tmp_path, "e12.json", {"n": 3, "ring": "exterior", "generators": [[1, 2]]})
    out_path = tmp_path / "t.json"
    code, _, _ = run(capsys, "cartan-betti", e12, "--imax", "5", "--out", str(out_path))
    table = json.loads(out_path.read_text())
    assert code == 0 and table["i_max"] == 5 and not table["truncated_above_p"]
    assert [table["table"][f"{i},{i + 1},3"] for i in range(1, 6)] == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("argv", [
    ["shift", "missing.json"],
    ["bogus"],
    ["verify", "--prime", "7"],
    ["verify", "--prime", "15"],
    ["verify", "--suite", "V99"],
    ["verify", "--trials", "1"],
])
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == cli.EXIT_INPUT


def test_bad_file_is_input_error(tmp_path, capsys):
    f = write(tmp_path, "bad.json", {"n": 2, "facets": [[1, 5]]})
    code, _, err = run(capsys, "shift", f)
    assert code == cli.EXIT_INPUT and "not a subset" in err


def test_genericity_failure_exit_code(tmp_path, capsys, monkeypatch):
    from cartanshift.errors import GenericityFailure

    def boom(*a, **k):
        raise GenericityFailure("disagree")
    monkeypatch.setattr(cli, "gin_exterior", boom)
    f = write(tmp_path, "j.json", {"n": 3, "ring": "exterior", "generators": [[1, 3]]})
    assert run(capsys, "gin", f)[0] == cli.EXIT_GENERICITY


def test_verify_and_explore(capsys):
    code, out, err = run(capsys, "verify", "--suite", "V1,V8", "--n-max", "3", "--samples", "2")
    report = json.loads(out)
    assert code == 0 and report["passed"] and sorted(report["suites"]) == ["V1", "V8"]
    assert "V1: PASS" in err
    code, out, _ = run(capsys, "explore", "--n-max", "4", "--samples", "5")
    data = json.loads(out)
    assert code == 0 and data["samples"] >= 5
