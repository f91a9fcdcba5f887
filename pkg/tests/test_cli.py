import json
import subprocess
import sys

import pytest

from multidom.cli import main, parse_assignment
from multidom import AssignmentError, MinusAssignment, PartitionSpec, SignedAssignment
from multidom.model import Variant


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_both_agree(capsys):
    code, out, _ = run(capsys, "compute", "--parts", "3,4", "--variant", "signed", "--engine", "both")
    assert code == 0
    assert "formula: 3" in out and "oracle: 3" in out
    assert "case: signed/odd_t/otherwise" in out
    assert "agree" in out


def test_compute_signed_total_default_engine(capsys):
    code, out, _ = run(capsys, "compute", "--parts", "2,2", "--variant", "signed-total")
    assert code == 0
    assert "formula: 4" in out


def test_compute_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "compute", "--parts", "1,6", "--engine", "both")
    record = json.loads(out)
    assert record["formula"] == record["oracle"] == 7
    assert record["agree"] is True
    assert record["case_label"] == "signed/odd_t/t1_k2_n1_eq_1"


def test_format_flag_after_subcommand(capsys):
    code, out, _ = run(capsys, "compute", "--parts", "2,2", "--format", "json")
    assert json.loads(out)["formula"] == 2


def test_compute_single_part_is_usage_error(capsys):
    code, _, err = run(capsys, "compute", "--parts", "7", "--variant", "minus")
    assert code == 2
    assert "k >= 2" in err


@pytest.mark.parametrize("parts", ["3,x", "0,2", ""])
def test_bad_parts_exit_2(capsys, parts):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--parts", parts])
    assert exc.value.code == 2


def test_compute_budget_exceeded(capsys):
    code, _, err = run(capsys, "--budget-states", "5", "compute", "--parts", "3,4", "--engine", "oracle")
    assert code == 2
    assert "budget" in err


def test_compute_mismatch_exit_3(capsys, monkeypatch):
    import multidom.cli as cli

    monkeypatch.setattr(cli, "domination_number", lambda spec, variant: 99)
    code, out, _ = run(capsys, "compute", "--parts", "3,4", "--engine", "both")
    assert code == 3
    assert "MISMATCH" in out


def test_witness_round_trips_through_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "witness", "--parts", "5,4,4")
    assert code == 0
    assert out.splitlines()[1:4] == ["1:3", "2:3", "3:3"]
    path = tmp_path / "w.txt"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--parts", "5,4,4", "--assignment", str(path))
    assert code == 0
    assert "valid" in out and "weight: 5" in out


def test_witness_json_minus(capsys):
    code, out, _ = run(capsys, "--format", "json", "witness", "--parts", "1,5", "--variant", "minus")
    record = json.loads(out)
    assert record["counts"] == [[1, 0, 0], [0, 5, 0]]
    assert record["vector"] == [1, 0, 0, 0, 0, 0]
    assert record["weight"] == 1 and record["valid"] is True


def test_verify_invalid_exit_1(capsys, tmp_path):
    path = tmp_path / "a.txt"
    path.write_text("# all -1\n1:0\n2:0\n", encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--parts", "2,2", "--assignment", str(path))
    assert code == 1
    assert "invalid" in out


def test_verify_minus_file(capsys, tmp_path):
    path = tmp_path / "a.txt"
    path.write_text("1:1,1,0\n2:1,1,0  # one +1 per part\n", encoding="utf-8")
    code, out, _ = run(capsys, "--format", "json", "verify", "--parts", "2,2",
                       "--variant", "minus", "--assignment", str(path))
    assert code == 0
    assert json.loads(out)["weight"] == 2


def test_verify_minus_file_rejected_for_signed(capsys, tmp_path):
    path = tmp_path / "a.txt"
    path.write_text("1:1,1,0\n2:1,1,0\n", encoding="utf-8")
    code, _, err = run(capsys, "verify", "--parts", "2,2", "--assignment", str(path))
    assert code == 2


@pytest.mark.parametrize(
    "text",
    ["1:1\n", "1:1\n2:1\n3:0\n", "1:1\n1:1\n", "1:1\n2:1,0,0\n", "1-1\n2:1\n", "1:1,1\n2:1\n"],
)
def test_parse_assignment_errors(text):
    with pytest.raises(AssignmentError):
        parse_assignment(text, PartitionSpec((1, 1)), Variant.MINUS)


def test_parse_assignment_signed_lines_for_minus():
    a = parse_assignment("2:1\n1:0\n", PartitionSpec((2, 1)), Variant.MINUS)
    assert a == MinusAssignment(((0, 0, 2), (1, 0, 0)))
    assert parse_assignment("1:2\n2:1", PartitionSpec((2, 1)), Variant.SIGNED) == SignedAssignment((2, 1))


def test_sweep_writes_csv_and_summary(capsys, tmp_path):
    out_path = tmp_path / "sweep.csv"
    code, out, _ = run(capsys, "sweep", "--max-n", "6", "--max-k", "2", "--variants", "minus",
                       "--out", str(out_path))
    assert code == 0
    assert "mismatches: 0" in out
    lines = out_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "sizes;n;k;t;i1;i2;variant;case_label;formula;oracle;naive;witness_weight;witness_valid;agree"
    assert len(lines) == 1 + 9
    values = {int(line.split(";")[8]) for line in lines[1:]}
    assert values == {1, 2}


def test_sweep_is_byte_stable(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path, jobs in ((a, "1"), (b, "2")):
        run(capsys, "sweep", "--max-n", "8", "--max-k", "3", "--out", str(path), "--jobs", jobs)
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()


def test_sweep_json_to_stdout(capsys):
    code, out, err = run(capsys, "--format", "json", "--budget-naive", "0", "sweep",
                         "--max-n", "4", "--max-k", "2", "--variants", "signed,signed-total")
    rows = json.loads(out)
    assert code == 0
    assert {r["variant"] for r in rows} == {"signed", "signed-total"}
    assert all(r["naive"] is None and isinstance(r["agree"], bool) for r in rows)
    assert "instances: 8" in err


def test_sweep_mismatch_exit_3(capsys, monkeypatch):
    import multidom.sweep as sweep

    monkeypatch.setattr(sweep, "domination_number", lambda spec, variant: 0)
    code, out, err = run(capsys, "sweep", "--max-n", "4", "--max-k", "2")
    assert code == 3
    assert "mismatches: 12" in err


def test_sweep_coverage_reports_uncovered(capsys):
    code, _, err = run(capsys, "sweep", "--max-n", "5", "--max-k", "3", "--variants", "signed")
    assert "signed/even_t/t2_k2_min_ge5: 0" in err
    assert "uncovered: " in err and "signed/even_t/t2_k2_min_ge5" in err.split("uncovered: ")[1]


def test_bench(capsys):
    code, out, _ = run(capsys, "--format", "json", "bench", "--parts", "3,4,5", "--repetitions", "3")
    record = json.loads(out)
    assert code == 0
    assert set(record["formula"]) == {"mean_s", "min_s", "max_s"}
    assert record["oracle"]["min_s"] > 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "multidom", "compute", "--parts", "5,5", "--engine", "both"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "formula: 6" in proc.stdout
