import json

import pytest

from abelweb import ConstantWeb, Matrix, MomentWebSpec, moment_web
from abelweb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "-r", "1", "-n", "2", "-d", "5")
    assert code == 0
    assert out.strip() == "6"


def test_bound_per_degree(capsys):
    code, out, _ = run(capsys, "bound", "-r", "2", "-n", "2", "-d", "5", "--per-degree")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "h\tbound"
    assert lines[-1] == "total\t4"


def test_moment_then_rank(tmp_path, capsys):
    path = tmp_path / "w.json"
    code, _, _ = run(
        capsys, "moment", "-r", "2", "-n", "2", "--taus", "0,1,2,3,4", "-o", str(path)
    )
    assert code == 0
    # round trip: the emitted file re-parses to the same web
    on_disk = ConstantWeb.from_json(json.loads(path.read_text()))
    assert on_disk == moment_web(MomentWebSpec(2, 2, [0, 1, 2, 3, 4]))

    code, out, _ = run(capsys, "rank", "--web", str(path))
    assert code == 0
    report = json.loads(out)
    assert report["total_rank"] == 4
    assert all(item["saturated"] for item in report["per_degree"])

    code, out, _ = run(capsys, "rank", "--web", str(path), "--tsv", "--paranoid")
    assert code == 0
    assert out.splitlines()[0] == "h\tdim\tbound\tsaturated"


def test_rank_deterministic(tmp_path, capsys):
    path = tmp_path / "w.json"
    run(capsys, "moment", "-r", "2", "-n", "2", "--taus", "0,1,2,3,4,5", "-o", str(path))
    _, first, _ = run(capsys, "rank", "--web", str(path))
    _, second, _ = run(capsys, "rank", "--web", str(path), "--parallel")
    assert first == second


def test_pg_and_degenerate_exit(tmp_path, capsys):
    bad = {"r": 1, "n": 2, "foliations": [[["1", "0"]], [["2", "0"]], [["0", "1"]]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "pg", "--web", str(path))
    assert code == 0
    verdict = json.loads(out)
    assert verdict == {"pg": False, "failing": [1, 2]}
    code, _, err = run(capsys, "rank", "--web", str(path))
    assert code == 2
    assert "general position" in err


def test_taus_accept_rationals(capsys):
    code, out, _ = run(capsys, "moment", "-r", "1", "-n", "2", "--taus", "1/2,-3,0")
    assert code == 0
    web = ConstantWeb.from_json(json.loads(out))
    assert web.d == 3


def test_recover_round_trip(tmp_path, capsys):
    web_path = tmp_path / "w.json"
    out_path = tmp_path / "rec.json"
    run(capsys, "moment", "-r", "2", "-n", "2", "--taus", "0,1,2,3,4,5", "-o", str(web_path))
    code, _, _ = run(capsys, "recover", "--web", str(web_path), "-o", str(out_path))
    assert code == 0
    data = json.loads(out_path.read_text())
    assert len(data["points"]) == 6
    assert Matrix.from_json(data["basis"]).is_invertible()


def test_recover_degenerate_exit(tmp_path, capsys):
    path = tmp_path / "w.json"
    run(capsys, "moment", "-r", "2", "-n", "2", "--taus", "0,1,2,3", "-o", str(path))
    code, _, err = run(capsys, "recover", "--web", str(path))
    assert code == 1  # too few foliations is an input error
    code, _, err = run(capsys, "rank", "--web", "no-such-file.json")
    assert code == 1


def test_akivis(tmp_path, capsys):
    path = tmp_path / "w.json"
    run(capsys, "moment", "-r", "1", "-n", "2", "--taus", "0,1,2", "-o", str(path))
    code, out, _ = run(capsys, "akivis", "--web", str(path))
    assert code == 0
    basis = Matrix.from_json(json.loads(out)["basis"])
    assert basis.is_invertible()


def test_canonical(tmp_path, capsys):
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps({"r": 2, "n": 2, "taus": ["0", "1", "2", "3", "4"]}))
    code, out, _ = run(capsys, "canonical", "--moment", str(spec_path))
    assert code == 0
    data = json.loads(out)
    assert data["N"] == 3
    assert data["q"] == 1


def test_fit_rnc_success_and_failure(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(json.dumps([["1", str(t), str(t * t)] for t in range(6)]))
    code, out, _ = run(capsys, "fit-rnc", "--points", str(good))
    assert code == 0
    assert json.loads(out)["parameters"][1] == "0"

    bad = tmp_path / "bad.json"
    points = [["1", str(t), str(t * t)] for t in range(5)] + [["1", "1", "7"]]
    bad.write_text(json.dumps(points))
    code, _, err = run(capsys, "fit-rnc", "--points", str(bad))
    assert code == 2
    assert "not on a common RNC" in err


def test_usage_error_is_exit_1(capsys):
    code, _, err = run(capsys, "bound", "-r", "1", "-n", "2")
    assert code == 1
    assert "error" in err
