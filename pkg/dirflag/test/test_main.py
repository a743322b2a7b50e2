import json
import os

import pytest

from dirflag.commonConst import *
from dirflag.dataStructures import CDirflagParameters
from dirflag.main import main

GRAPHS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "data", "graphs")


@pytest.fixture(autouse=True)
def parameters():
    saved = {key: value for key, value in vars(CDirflagParameters).items() if not key.startswith("__")}
    yield
    for key, value in saved.items():
        setattr(CDirflagParameters, key, value)


def graph(name):
    return os.path.join(GRAPHS, name)


def test_homology(capsys):
    assert main(["homology", graph("four_point_sphere.csv")]) == EXIT_OK
    assert capsys.readouterr().out == "1 0 1\n"
    assert main(["homology", graph("four_point_sphere.flag"), "--complex", "allowed", "--field", "GF(2)"]) == EXIT_OK
    assert capsys.readouterr().out == "1 0 0\n"


def test_homologyWritesTable(capsys, tmp_path):
    filename = str(tmp_path / "betti.csv")
    assert main(["homology", graph("reciprocal_pair.flag"), "--max-dim", "1", "--output", filename]) == EXIT_OK
    assert capsys.readouterr().out == "1 1\n"
    with open(filename) as f:
        assert f.read().splitlines() == ["degree,betti", "0,1", "1,1"]


def test_barcode(capsys):
    assert main(["barcode", graph("reciprocal_pair_appendage.csv")]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "degree,birth,death"
    assert "1,1,2" in lines
    assert main(["barcode", graph("weighted_triangle.csv"), "--pipeline", "grounded-h1"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["degree,birth,death", "1,0,3"]


def test_homotopy(capsys, tmp_path):
    pair = graph("reciprocal_pair.flag")
    assert main(["homotopy", pair, "--map-f", "0,1", "--map-g", "0,1"]) == EXIT_OK
    assert capsys.readouterr().out == "equal\n"
    assert main(["homotopy", pair, "--map-f", "0,1", "--map-g", "0,0", "--system", "dfl"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("absent (exhausted")

    filename = str(tmp_path / "witness.json")
    assert main(["homotopy", pair, pair, "--map-f", "0,1", "--map-g", "0,0", "--system", "A",
                 "--output", filename]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("found 1 steps")
    with open(filename) as f:
        assert json.load(f) == {"maps": [[0, 1], [0, 0]], "forward": [True]}


def test_equalMapsAreValidatedFirst(capsys):
    pair = graph("reciprocal_pair.flag")
    assert main(["homotopy", pair, "--map-f", "0,1,0", "--map-g", "0,1,0"]) == EXIT_USAGE
    assert capsys.readouterr().out == ""
    triangle = graph("weighted_triangle.csv")
    assert main(["homotopy", triangle, "--map-f", "1,0,0", "--map-g", "1,0,0", "--system", "A"]) == EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == "" and "NotWeak" in captured.err
    assert main(["homotopy", triangle, "--map-f", "0,0,1", "--map-g", "0,0,1", "--system", "A"]) == EXIT_OK
    assert capsys.readouterr().out == "equal\n"


def test_homotopyBudget(capsys):
    pair = graph("reciprocal_pair.flag")
    code = main(["homotopy", pair, "--map-f", "0,1", "--map-g", "0,0", "--system", "dfl", "--budget", "1"])
    assert code == EXIT_BUDGET
    assert capsys.readouterr().out.startswith("inconclusive")


def test_experiment(capsys, tmp_path):
    filename = str(tmp_path / "report.json")
    assert main(["experiment", "cylinder-k2", "--output", filename]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["status"] == "pass"
    with open(filename) as f:
        assert json.load(f)["experiment"] == "cylinder-k2"


def test_errors(capsys, tmp_path):
    assert main([]) == EXIT_USAGE
    assert main(["homology"]) == EXIT_USAGE
    assert main(["experiment", "unknown"]) == EXIT_USAGE
    assert main(["homology", str(tmp_path / "missing.flag")]) == EXIT_USAGE
    assert main(["homology", graph("reciprocal_pair.flag"), "--field", "6"]) == EXIT_USAGE
    assert main(["homotopy", graph("reciprocal_pair.flag"), "--map-f", "0,1,0", "--map-g", "0,1"]) == EXIT_USAGE
    bad = tmp_path / "bad.flag"
    bad.write_text("dim 0\n0 0\ndim 1\n0 0\n")
    assert main(["homology", str(bad)]) == EXIT_PARSE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "line 4" in captured.err

    extra = tmp_path / "extra.csv"
    extra.write_text("source target weight\n0 1 2 9\n1 2 1\n")
    assert main(["homology", str(extra)]) == EXIT_PARSE
    captured = capsys.readouterr()
    assert captured.out == "" and "line 2" in captured.err
