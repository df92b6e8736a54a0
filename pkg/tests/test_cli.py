import json

import pytest

from slplethysm import waring
from slplethysm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--no-timing", *argv)
    return code, json.loads(out)


def test_report_shape(capsys):
    code, rep = run_json(capsys, "decompose", "-k", "3", "-n", "6")
    assert code == 0
    assert set(rep) == {"command", "inputs", "results", "checks", "passed"}
    assert rep["checks"]["table1_multiplicities"]
    assert rep["results"]["total_dim"] == 8436


def test_timing_present_by_default(capsys):
    code, out, _ = run(capsys, "decompose", "-k", "2", "-n", "3")
    rep = json.loads(out)
    assert code == 0 and "timing_s" in rep and rep["backend"] in ("cython", "python")


def test_no_timing_is_byte_stable(capsys):
    outs = [run(capsys, "--no-timing", "verify-hwv", "-n", "6", "--rows", "1", "16")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, "verify-hwv", "-n", "6", "--rows", "1", "--no-timing")[1] for _ in range(2)]
    assert outs[0] == outs[1] and "timing_s" not in outs[0]


@pytest.mark.parametrize("fmt", ["markdown", "csv"])
def test_decompose_formats(capsys, fmt):
    code, out, _ = run(capsys, "decompose", "-k", "3", "-n", "7", "--algebra", "sl", "--format", fmt)
    assert code == 0
    assert "[2,1,0,...,0,-1,-2]" in out or "2 1 0 0 0 -1 -2" in out


def test_decompose_usage_errors(capsys):
    assert run(capsys, "decompose", "-k", "0", "-n", "3")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "-k", "3"])
    assert exc.value.code == 2


def test_lr_with_oracle(capsys):
    code, rep = run_json(capsys, "lr", "2,1", "2,1", "--oracle")
    assert code == 0 and rep["checks"]["oracle_agrees"]
    mults = {tuple(t["nu"]): t["multiplicity"] for t in rep["results"]["terms"]}
    assert mults[(3, 2, 1)] == 2
    assert run(capsys, "lr", "1,2", "1")[0] == 2


def test_verify_hwv(capsys):
    code, rep = run_json(capsys, "verify-hwv", "-n", "7")
    assert code == 0 and rep["passed"] and len(rep["results"]) == 16


def test_verify_hwv_row_below_minimum(capsys):
    code, rep = run_json(capsys, "verify-hwv", "-n", "4", "--rows", "4,16")
    assert code == 2
    assert rep["results"][1]["error"] == "row 16 requires n >= 6"
    assert rep["checks"]["row4"] is True
    assert run(capsys, "verify-hwv", "-n", "6", "--rows", "17")[0] == 2


def test_multiplicity(capsys):
    code, rep = run_json(capsys, "multiplicity", "-n", "7", "--template", "[1,0*,-1]")
    assert code == 0
    assert rep["results"]["kernel_dim"] == rep["results"]["plethysm_multiplicity"] == 4
    assert rep["results"]["table2_rows"] == [4, 5, 6, 7]
    code, rep = run_json(capsys, "multiplicity", "-n", "6", "--weight", "[1,1,1,-1,-1,-1]")
    assert code == 0 and rep["results"]["kernel_dim"] == 1
    code, out, _ = run(capsys, "multiplicity", "-n", "6", "--template", "[0*]", "--format", "markdown")
    assert out == "3 = 3, pass\n"


def test_multiplicity_usage_errors(capsys):
    assert run(capsys, "multiplicity", "-n", "6")[0] == 2
    assert run(capsys, "multiplicity", "-n", "6", "--weight", "[1,0,-1]")[0] == 2
    assert run(capsys, "multiplicity", "-n", "6", "--weight", "[0,1,0,0,0,-1]")[0] == 2
    assert run(capsys, "multiplicity", "-n", "6", "--template", "[1,0,-1]")[0] == 2


def test_verify_bundled(capsys):
    code, rep = run_json(capsys, "verify-certificate", "--all-bundled")
    assert code == 0 and len(rep["results"]) == 7
    code, out, _ = run(capsys, "verify-certificate", "--bundled", "f1_rank", "--format", "markdown")
    assert code == 0
    assert "rank <= 8; catalecticant >= 5" in out
    assert "cited value rank(f1) = 9" in out
    assert run(capsys, "verify-certificate", "--bundled", "nope")[0] == 2
    assert run(capsys, "verify-certificate")[0] == 2


def test_verify_file_failure(capsys, tmp_path):
    data = waring.bundled_certificates()["f2_border"].to_json()
    data["terms"][3]["coeff"] = {"-2": "1/5"}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, rep = run_json(capsys, "verify-certificate", str(bad))
    assert code == 1
    assert rep["results"][0]["first_difference"] is not None
    code, out, _ = run(capsys, "verify-certificate", str(bad), "--format", "markdown")
    assert code == 1 and "first difference" in out
    assert run(capsys, "verify-certificate", str(tmp_path / "missing.json"))[0] == 2


def test_observation(capsys):
    code, rep = run_json(capsys, "observation", "-n", "6", "--rows", "3,7,16")
    assert code == 0
    by_row = {r["row"]: r for r in rep["results"]}
    assert by_row[3]["excluded"]
    assert by_row[7]["size"] <= 144


def test_cw(capsys):
    code, rep = run_json(capsys, "cw")
    assert code == 0 and all(rep["checks"].values())
    assert rep["results"]["f2"]["catalecticant_tight"]
    assert not rep["results"]["f1"]["catalecticant_tight"]


def test_workers_env_keeps_order(capsys, monkeypatch):
    _, serial = run(capsys, "--no-timing", "verify-hwv", "-n", "6")[:2]
    monkeypatch.setenv("SLPLETHYSM_WORKERS", "2")
    _, parallel = run(capsys, "--no-timing", "verify-hwv", "-n", "6")[:2]
    assert serial == parallel
