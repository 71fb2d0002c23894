import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from setflow.cli import main
from setflow.survey import SURVEY_CSV_COLUMNS

from helpers import majority

MAJ3 = '{"n":3,"sets":[[1,2],[1,3],[2,3],[1,2,3]]}'
STAR4 = '{"n":4,"sets":[[1],[1,2],[1,3],[1,4],[1,2,3],[1,2,4],[1,3,4],[1,2,3,4]]}'
LOWER_SQUARE = '{"n":3,"sets":[[],[1],[2],[1,2]]}'


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -------------------------------------------------------------------- survey


def test_survey_jsonl(capsys):
    code, out, err = run_cli(capsys, "survey", "-n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5  # 4 records + summary
    records = [json.loads(line) for line in lines[:4]]
    assert all(r["flags"]["maximal_intersecting"] for r in records)
    assert all(r["empty_minimal"] for r in records)
    assert sum(r["c"][0] for r in records if r["c"]) > 0
    summary = json.loads(lines[4])["summary"]
    assert summary == {"n": 3, "total": 4, "empty_minimal": 4, "central": 1}
    assert "4 families" in err


def test_survey_record_c_sums_to_factorial(capsys):
    _, out, _ = run_cli(capsys, "survey", "-n", "4")
    for line in out.strip().splitlines()[:-1]:
        rec = json.loads(line)
        if rec["empty_minimal"]:
            assert sum(rec["c"]) == 24


def test_survey_csv(capsys):
    code, out, _ = run_cli(capsys, "survey", "-n", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == ",".join(SURVEY_CSV_COLUMNS)
    assert len(lines) == 5


def test_survey_canonical_dedupes(capsys):
    _, out, _ = run_cli(capsys, "survey", "-n", "3", "--canonical")
    assert len(out.strip().splitlines()) == 3  # 2 classes + summary


def test_survey_deterministic_across_runs_and_jobs(tmp_path):
    paths = [tmp_path / f"s{i}.jsonl" for i in range(3)]
    assert main(["survey", "-n", "4", "-o", str(paths[0])]) == 0
    assert main(["survey", "-n", "4", "-o", str(paths[1])]) == 0
    assert main(["survey", "-n", "4", "--jobs", "2", "-o", str(paths[2])]) == 0
    blobs = [p.read_bytes() for p in paths]
    assert blobs[0] == blobs[1] == blobs[2]


def test_survey_plot_writes_figure(tmp_path, capsys):
    fig = tmp_path / "survey.png"
    code, _, _ = run_cli(capsys, "survey", "-n", "3", "-o", str(tmp_path / "r.jsonl"),
                         "--plot", str(fig))
    assert code == 0
    assert fig.exists() and fig.stat().st_size > 0


def test_survey_rejects_large_n(capsys):
    code, _, err = run_cli(capsys, "survey", "-n", "7")
    assert code == 2 and "error" in err


# -------------------------------------------------------------------- verify


def test_verify_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "-n", "3", "--suite", "formula")
    assert code == 0
    assert "PASS" in out


def test_verify_out_of_range(capsys):
    code, _, err = run_cli(capsys, "verify", "-n", "6", "--suite", "equivalence")
    assert code == 2 and "error" in err


def test_verify_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "-n", "3", "--suite", "nope"])
    assert exc.value.code == 2
    capsys.readouterr()


# ----------------------------------------------------------------- decompose


def test_decompose_majority(tmp_path, capsys):
    src = tmp_path / "maj3.json"
    src.write_text(MAJ3)
    code, out, _ = run_cli(capsys, "decompose", "-i", str(src))
    assert code == 0
    obj = json.loads(out)
    assert obj["c"] == [2, 2, 2] and obj["denominator"] == 6


def test_decompose_non_minimal_exits_one(tmp_path, capsys):
    star4 = tmp_path / "star4.json"
    star4.write_text(STAR4)
    lifted = tmp_path / "lifted.json"
    assert main(["construct", "--kind", "lift_swap", "--family", str(star4),
                 "--set", "1", "-o", str(lifted)]) == 0
    capsys.readouterr()
    code, _, err = run_cli(capsys, "decompose", "-i", str(lifted))
    assert code == 1
    assert "witness" in err


def test_decompose_rejects_invalid_family(tmp_path, capsys):
    src = tmp_path / "bad.json"
    src.write_text('{"n":2,"sets":[[1]]}')  # not maximal intersecting
    code, _, err = run_cli(capsys, "decompose", "-i", str(src))
    assert code == 2


# ----------------------------------------------------------------- construct


def test_construct_central(capsys):
    code, out, _ = run_cli(capsys, "construct", "--kind", "central", "-n", "3")
    assert code == 0
    assert out.strip() == MAJ3.replace(" ", "")


def test_construct_near_central(tmp_path, capsys):
    maj = tmp_path / "maj3.json"
    maj.write_text(MAJ3)
    mid = tmp_path / "g.json"
    mid.write_text('{"n":3,"sets":[[1]]}')
    code, out, _ = run_cli(capsys, "construct", "--kind", "near_central",
                           "--family", str(maj), "--middle", str(mid))
    assert code == 0
    assert json.loads(out) == {"n": 3, "sets": [[1], [1, 2], [1, 3], [1, 2, 3]]}


def test_construct_missing_args(capsys):
    code, _, err = run_cli(capsys, "construct", "--kind", "central")
    assert code == 2
    code, _, err = run_cli(capsys, "construct", "--kind", "lift_swap", "--set", "1")
    assert code == 2


def test_construct_lift_swap_precondition_error(tmp_path, capsys):
    maj = tmp_path / "maj3.json"
    maj.write_text(MAJ3)
    code, _, err = run_cli(capsys, "construct", "--kind", "lift_swap",
                           "--family", str(maj), "--set", "1,2")
    assert code == 2 and "excluded" in err


# --------------------------------------------------------------------- check


def test_check_reports_and_passes(tmp_path, capsys):
    f = tmp_path / "f.json"
    f.write_text(MAJ3)
    g = tmp_path / "g.json"
    g.write_text(LOWER_SQUARE)
    code, out, _ = run_cli(capsys, "check", "--family", str(f), "--downset", str(g))
    assert code == 0
    obj = json.loads(out)
    assert obj == {"dot": -4, "identity_ok": True, "star_dots": [0, 0, -8], "bound_ok": True}


def test_check_rejects_non_downset(tmp_path, capsys):
    f = tmp_path / "f.json"
    f.write_text(MAJ3)
    code, _, err = run_cli(capsys, "check", "--family", str(f), "--downset", str(f))
    assert code == 2 and "subset-closed" in err


# ---------------------------------------------------------------------- flow


def test_flow_formula_equals_brute(tmp_path, capsys):
    src = tmp_path / "maj3.json"
    src.write_text(MAJ3)
    code, out1, _ = run_cli(capsys, "flow", "-i", str(src), "--dual")
    code2, out2, _ = run_cli(capsys, "flow", "-i", str(src), "--dual", "--method", "brute")
    assert code == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["axes"]["1"] == [2, 4, 4, 2]


# ----------------------------------------------------------------- enumerate


def test_enumerate_maximal(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "-n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert MAJ3.replace(" ", "") in lines


def test_enumerate_canonical(capsys):
    _, out, _ = run_cli(capsys, "enumerate", "-n", "3", "--canonical")
    assert len(out.strip().splitlines()) == 2


def test_enumerate_downsets(capsys):
    _, out, _ = run_cli(capsys, "enumerate", "-n", "2", "--kind", "downsets")
    lines = out.strip().splitlines()
    assert len(lines) == 6
    assert json.loads(lines[0]) == {"n": 2, "sets": []}


# ------------------------------------------------------------------- process


def test_module_entry_point(tmp_path):
    out = tmp_path / "r.jsonl"
    env = dict(os.environ)
    src = str(Path(__file__).resolve().parent.parent / "src")
    env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "setflow", "survey", "-n", "2", "-o", str(out)],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert len(out.read_text().strip().splitlines()) == 3
