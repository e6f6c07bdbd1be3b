import csv
import json

import pytest

from diagpack.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_json(capsys):
    code, out, _ = run(capsys, "build", "--n", "9", "--l", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["diagonals"]) == 27 and doc["valid"] is True


def test_build_svg_file(capsys, tmp_path):
    path = tmp_path / "fig.svg"
    code, _, err = run(capsys, "build", "--n", "8", "--l", "2", "--format", "svg", "-o", str(path))
    assert code == 0 and "count=21" in err
    assert path.read_text().count('class="diagonal"') == 21


def test_build_ascii(capsys):
    code, out, _ = run(capsys, "build", "--n", "1", "--l", "1", "--format", "ascii")
    assert code == 0 and out == "+-+\n|/|\n+-+\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "--n", "3", "--l", "4"],
        ["build", "--n", "0", "--l", "1"],
        ["build", "--n", "3", "--l", "1", "--format", "png"],
        ["build", "--n", "10001", "--l", "1"],
        ["exact", "--n", "11", "--l", "1", "--method", "mis"],
        ["bounds", "--n", "x", "--l", "1"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "n, l, expected",
    [(9, 2, (27, 27, 27)), (8, 2, (21, 21, None)), (4, 1, (10, 10, 10))],
)
def test_bounds(capsys, n, l, expected):
    code, out, _ = run(capsys, "bounds", "--n", str(n), "--l", str(l))
    doc = json.loads(out)
    assert code == 0 and (doc["lower"], doc["upper"], doc["closed"]) == expected


@pytest.mark.parametrize("n, l, method, value", [(6, 2, "lines", 12), (3, 2, "mis", 3), (2, 1, "mis", 3)])
def test_exact(capsys, n, l, method, value):
    code, out, _ = run(capsys, "exact", "--n", str(n), "--l", str(l), "--method", method)
    doc = json.loads(out)
    assert code == 0 and doc["value"] == value == len(doc["witness"])


def test_exact_budget_exit(capsys):
    code, out, _ = run(capsys, "exact", "--n", "6", "--l", "1", "--method", "mis", "--budget", "0")
    assert code == 3 and json.loads(out)["optimal"] is False


def test_exact_mis_force(capsys):
    code, out, _ = run(capsys, "exact", "--n", "11", "--l", "2", "--method", "mis", "--force")
    assert code == 0 and json.loads(out)["value"] == 40  # floor(12/3) + 2*18


def test_sweep(capsys, tmp_path):
    path = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "sweep", "--l-max", "2", "--n-max", "20", "--csv", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "n,l,lower,upper,closed,exact,divisible,agrees"
    assert "9,2,27,27,27,27,true,true" in lines
    assert "8,2,21,21,,21,false,true" in lines
    assert "2,2,1,1,,1,false,true" in lines
    rows = list(csv.DictReader(lines))
    assert [(int(r["l"]), int(r["n"])) for r in rows] == sorted((int(r["l"]), int(r["n"])) for r in rows)
    for r in rows:
        assert int(r["lower"]) <= int(r["upper"])
        present = {r[k] for k in ("lower", "upper", "closed", "exact") if r[k] != ""}
        assert (r["agrees"] == "true") == (len(present) == 1)


def test_sweep_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "sweep", "--l-max", "1", "--n-max", "3", "--csv", str(tmp_path / "no" / "x.csv"))
    assert code == 2 and "cannot write" in err


@pytest.mark.parametrize("n, l, value", [(6, 2, 12), (4, 1, 10), (4, 3, 3)])
def test_verify_ok(capsys, tmp_path, n, l, value):
    log = tmp_path / "d.jsonl"
    code, out, _ = run(capsys, "verify", "--n", str(n), "--l", str(l), "--log", str(log))
    assert code == 0 and "verdict: OK" in out
    assert f"mis           {value}" in out
    assert not log.exists()


def test_verify_discrepancy_logged(capsys, tmp_path, monkeypatch):
    import diagpack.cli as cli
    from diagpack.oracle import cross_validate as real

    def broken(grid, budget):
        cv = real(grid, budget)
        return type(cv)(**{**cv.__dict__, "discrepancies": ("injected",)})

    monkeypatch.setattr(cli, "cross_validate", broken)
    log = tmp_path / "d.jsonl"
    code, out, _ = run(capsys, "verify", "--n", "3", "--l", "2", "--log", str(log))
    assert code == 4 and "DISCREPANCY" in out
    record = json.loads(log.read_text())
    assert record["discrepancies"] == ["injected"] and record["ok"] is False


def test_verify_budget(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--n", "6", "--l", "1", "--budget", "0", "--log", str(tmp_path / "d"))
    assert code == 3 and "BUDGET" in out
