import json
import subprocess
import sys

import pytest

from pfk.cli import main
from pfk.criteria import DegreeSpec, eta, theorem4_delta
from pfk.factor import verify_factor
from pfk.generators import complete, path, petersen, remark1_family
from pfk.graph import Graph, parse_graph


@pytest.fixture
def gfile(tmp_path):
    def write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(g.to_text())
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_examples(capsys, gfile):
    assert run(capsys, "check", gfile(petersen()), "--even", "2")[0] == 0
    code, out, _ = run(capsys, "check", gfile(remark1_family(2).graph), "--even", "4")
    assert code == 4 and "exists: no" in out and "delta: 12" in out


def test_check_malformed(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3 2\n0 1\n1 q\n")
    code, _, err = run(capsys, "check", str(p), "--even", "2")
    assert code == 3 and "line 3" in err


def test_check_missing_file(capsys, tmp_path):
    assert run(capsys, "check", str(tmp_path / "nope"), "--even", "2")[0] == 3


def test_find_examples(capsys, gfile):
    code, out, _ = run(capsys, "find", gfile(complete(4)), "--odd", "1")
    assert code == 0 and len(out.split("\n")) == 3
    code, out, _ = run(capsys, "find", gfile(petersen()), "--even", "2", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["edges"]) == 10 and data["degrees"] == [2] * 10
    assert verify_factor(petersen(), data["edges"], DegreeSpec.constant(10, 2)) == []
    assert run(capsys, "find", gfile(Graph(1)), "--odd", "1")[0] == 4


def test_text_factor_is_sorted(capsys, gfile):
    _, out, _ = run(capsys, "find", gfile(petersen()), "--even", "2")
    edges = [tuple(map(int, line.split())) for line in out.strip().splitlines()]
    assert edges == sorted(edges)


def test_deficiency_examples(capsys, gfile, tmp_path):
    g = remark1_family(2).graph
    code, out, _ = run(capsys, "deficiency", gfile(g), "--g-const", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["max"] == 12
    assert theorem4_delta(g, data["T"], [4] * g.n) == 12
    spec = tmp_path / "spec.txt"
    spec.write_text("".join(f"{v} 1 1\n" for v in range(4)))
    code, out, _ = run(capsys, "deficiency", gfile(complete(4)), "--gf-file", str(spec), "--full-lovasz", "--json")
    data = json.loads(out)
    assert data["max"] == 0 and data["S"] == [] and data["T"] == []
    assert eta(complete(4), data["S"], data["T"], DegreeSpec.constant(4, 1)) == 0
    code, out, _ = run(capsys, "deficiency", gfile(Graph(1)), "--g-const", "1")
    assert "max delta: 1" in out and "certificate T: \n" in out + "\n"


def test_deficiency_cap(capsys, gfile, monkeypatch):
    monkeypatch.setenv("PFK_MAX_N", "5")
    assert run(capsys, "deficiency", gfile(petersen()), "--even", "2")[0] == 3


def test_lambda_examples(capsys, gfile):
    code, out, _ = run(capsys, "lambda", gfile(petersen()))
    assert code == 0 and "lambda: 3" in out
    assert "lambda: 1" in run(capsys, "lambda", gfile(path(3)))[1]
    assert "lambda: 0" in run(capsys, "lambda", gfile(Graph(4, ((0, 1), (2, 3)))))[1]
    assert run(capsys, "lambda", gfile(Graph(1)))[0] == 3


def test_gen_round_trip(capsys):
    _, out, _ = run(capsys, "gen", "remark1", "--m", "2")
    assert parse_graph(out) == remark1_family(2).graph
    _, out, _ = run(capsys, "gen", "named", "petersen")
    assert parse_graph(out) == petersen()
    _, out, _ = run(capsys, "gen", "random", "--n", "8", "--k", "3", "--seed", "5")
    _, again, _ = run(capsys, "gen", "random", "--n", "8", "--k", "3", "--seed", "5")
    assert out == again
    assert run(capsys, "gen", "remark1", "--m", "3")[0] == 2


def test_spec_files(capsys, gfile, tmp_path):
    k4 = gfile(complete(4))
    gf = tmp_path / "gf.txt"
    gf.write_text("0 1 3\n1 1 3\n2 1 3\n3 1 3\n")
    assert run(capsys, "check", k4, "--gf-file", str(gf))[0] == 0
    g_only = tmp_path / "lower.txt"
    g_only.write_text("0 2\n1 2\n2 2\n3 2\n")
    assert run(capsys, "find", k4, "--g-file", str(g_only))[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1 2\n1 1 1\n2 1 1\n3 1 1\n")
    assert run(capsys, "check", k4, "--gf-file", str(bad))[0] == 3
    bad.write_text("0 1 1\n")
    assert run(capsys, "check", k4, "--gf-file", str(bad))[0] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "G", "--even", "3"],
        ["check", "G", "--odd", "2"],
        ["check", "G"],
        ["check", "G", "--even", "2", "--odd", "1"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys, gfile, argv):
    argv = [gfile(complete(4)) if a == "G" else a for a in argv]
    assert run(capsys, *argv)[0] == 2


def test_check_and_find_agree(capsys, gfile):
    for g in (complete(4), complete(5), petersen(), path(4), remark1_family(2).graph):
        p = gfile(g)
        for flag in (["--even", "2"], ["--odd", "1"], ["--odd", "3"]):
            assert run(capsys, "check", p, *flag)[0] == run(capsys, "find", p, *flag)[0]


def test_check_json_certificate_round_trip(capsys, gfile):
    g = remark1_family(2).graph
    _, out, _ = run(capsys, "check", gfile(g), "--even", "4", "--json")
    data = json.loads(out)
    cert = data["certificate"]
    assert theorem4_delta(g, cert["T"], [4] * g.n) == cert["value"]


def test_verify(capsys, tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("mode=even\nm=2\ncount=5\nn_max=9\n")
    code, out, _ = run(capsys, "verify", str(cfg))
    assert code == 0 and "defects=0" in out
    cfg.write_text("mode=even\nm=3\n")
    assert run(capsys, "verify", str(cfg))[0] == 2
    assert run(capsys, "verify", "tightness")[0] == 0
    assert run(capsys, "verify", "even-m2", "--set", "count=4")[0] == 0
    assert run(capsys, "verify", "no-such-campaign")[0] == 3


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--max-n", "3")
    assert code == 0 and "0 disagreement" in out


def test_console_entry_point(gfile):
    proc = subprocess.run([sys.executable, "-m", "pfk.cli", "lambda", gfile(petersen())],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "lambda: 3" in proc.stdout
