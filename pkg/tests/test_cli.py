"""End-to-end runs of the command line interface."""
import json

import pytest

from epsalg.cli import run


def _lines(capsys):
    return capsys.readouterr().out.strip().splitlines()


def test_normalize(capsys):
    assert run(["normalize", "--alg", "boson:n=1", "a1*ad1*ad1"]) == 0
    assert _lines(capsys) == ["ad1^2*a1 + 2*h*ad1"]


def test_normalize_with_family_flags(capsys):
    assert run(["normalize", "--family", "boson", "--n", "1", "--h", "2", "a1*ad1"]) == 0
    assert _lines(capsys) == ["ad1*a1 + 2"]


def test_normalize_accepts_function_calls(capsys):
    assert run(["normalize", "--alg", "boson:n=1", "J(a1)"]) == 0
    assert _lines(capsys) == ["ad1"]
    assert run(["normalize", "--alg", "fermion:n=1", "comm(a1, ad1)"]) == 0
    assert _lines(capsys) == ["h"]


def test_bracket(capsys):
    assert run(["bracket", "--alg", "fermion:n=1", "a1", "ad1"]) == 0
    assert _lines(capsys) == ["h"]
    assert run(["bracket", "--kind", "plain", "--alg", "fermion:n=1", "a1", "ad1"]) == 0
    assert _lines(capsys) == ["-2*ad1*a1 + h"]
    assert run(["bracket", "--kind", "poisson", "--alg", "boson:n=1", "a1", "ad1"]) == 0
    assert _lines(capsys) == ["1"]


def test_mu(capsys):
    assert run(["mu", "--alg", "boson:n=1", "--order", "1", "a1", "ad1"]) == 0
    assert _lines(capsys) == ["1"]
    assert run(["mu", "--alg", "boson:n=1", "--order", "0", "a1", "ad1"]) == 0
    assert _lines(capsys) == ["ad1*a1"]


def test_confluence(capsys):
    assert run(["confluence", "--alg", "excl:n=2"]) == 0
    out = _lines(capsys)
    assert any("ambiguities" in line and "examined" in line for line in out)
    assert out[-1].startswith("confluence: ")
    assert "FAIL" not in "\n".join(out)


def test_dim(capsys):
    assert run(["dim", "--alg", "excl:n=2"]) == 0
    assert _lines(capsys) == ["9"]
    assert run(["dim", "--alg", "boson:n=1", "--maxlen", "3"]) == 0
    assert _lines(capsys) == ["10 words (truncated at length 3)"]
    assert run(["dim", "--alg", "ext:n=3", "--maxlen", "3"]) == 0
    assert _lines(capsys) == ["8 words (complete)"]


def test_dim_refuses_to_guess_unbounded(capsys):
    assert run(["dim", "--alg", "boson:n=1"]) == 1
    assert "use --maxlen" in capsys.readouterr().out


def test_rank_pair(tmp_path, capsys):
    data = {
        "alg": "cex",
        "P": {"rows": [[1, 0]], "cols": [[0, 1]], "entries": [["X*y"]]},
        "Q": {"rows": [[0, 1]], "cols": [[1, 0]], "entries": [["Y*x"]]},
    }
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(data))
    assert run(["rank", "--file", str(path)]) == 1
    out = capsys.readouterr().out
    assert "{(1,0):1} (even 1 | odd 0, total 1)" in out
    assert "{(0,1):1} (even 1 | odd 0, total 1)" in out
    assert "augmentation not multiplicative" in out


def test_rank_single_matrix(tmp_path, capsys):
    data = {
        "rows": [[0, 0], [1, 0]],
        "cols": [[0, 0], [1, 0]],
        "entries": [["1", "0"], ["0", "1"]],
    }
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps(data))
    assert run(["rank", "--alg", "fermion:n=2,h=0", "--file", str(path)]) == 0
    out = capsys.readouterr().out
    assert "total 2" in out


def test_rank_needs_an_algebra(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"rows": [], "cols": [], "entries": []}))
    assert run(["rank", "--file", str(path)]) == 2
    assert "no algebra" in capsys.readouterr().err


def test_presets_listing(capsys):
    assert run(["presets"]) == 0
    out = _lines(capsys)
    assert len(out) == 9
    assert any(line.startswith("qplane:2") for line in out)


@pytest.mark.parametrize(
    "suite,alg",
    [
        ("factor", "fermion:n=2"),
        ("confluence", "excl:n=2"),
        ("lie", "pseudo-boson:n=2"),
        ("poisson", "boson:n=2"),
        ("deformation", "excl-dual:n=2"),
        ("noa", "boson:n=2"),
        ("oscillator", "boson:n=2"),
    ],
)
def test_verify_suites_pass(suite, alg, capsys):
    code = run(["verify", "--suite", suite, "--alg", alg, "--samples", "8"])
    out = capsys.readouterr().out
    assert code == 0, out
    assert "FAIL" not in out
    assert out.strip().splitlines()[-1].endswith("checks passed")


def test_machine_format(capsys):
    assert run(["verify", "--suite", "confluence", "--alg", "fermion:n=1",
                "--format", "machine"]) == 0
    for line in _lines(capsys):
        record = json.loads(line)
        assert set(record) == {"suite", "case", "status", "payload"}
        assert record["status"] in ("pass", "fail")
        assert record["suite"] == "verify-confluence"


def test_usage_errors(capsys):
    assert run(["normalize", "a1"]) == 2
    assert "pick an algebra" in capsys.readouterr().err
    assert run(["normalize", "--family", "boson", "a1"]) == 2
    assert "--family needs --n" in capsys.readouterr().err
    assert run(["normalize", "--alg", "nonsense:1", "a1"]) == 2
    assert run(["normalize", "--alg", "boson:n=1", "a1 ** ad1"]) == 2
    assert "offset 4" in capsys.readouterr().err
    assert run(["normalize", "--alg", "boson:n=1", "zz"]) == 2
    assert run(["mu", "--alg", "qplane:2", "--order", "0", "x", "y"]) == 2
    assert "no deformation expansion" in capsys.readouterr().err
    assert run(["rank", "--alg", "cex", "--file", "/does/not/exist.json"]) == 2


def test_argparse_exits_are_mapped(capsys):
    assert run(["no-such-command"]) == 2
    assert run([]) == 2
    capsys.readouterr()
    assert run(["--help"]) == 0
    assert "normalize" in capsys.readouterr().out
