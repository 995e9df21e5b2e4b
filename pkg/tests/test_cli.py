import json
import subprocess
import sys

import pytest
from conftest import fixture_path

from bulkcor.cli import EXIT_DATA, EXIT_FAIL, EXIT_OK, JobSpec, main, run


def path(name):
    return str(fixture_path(name))


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def table_rows(text, size):
    lines = text.splitlines()
    start = next(i for i, line in enumerate(lines) if line.split()[:1] == ["P0"] and len(line.split()) == size)
    return [[int(x) for x in line.split()[1:]] for line in lines[start + 1:start + 1 + size]]


def test_partition_of_unit_on_semisimple_double_is_a_permutation_table(capsys):
    code, out, _ = call(capsys, "partition", path("d_z2"), path("trivial_frob"), "--pims", "all")
    assert code == EXIT_OK
    rows = table_rows(out, 4)
    assert all(sorted(r) == [0, 0, 0, 1] for r in rows)
    assert sorted(c for r in zip(*rows) for c in r) == [0] * 12 + [1] * 4
    assert "pass  cardy_equals_cartan" in out


def test_partition_with_selected_pims(capsys):
    code, out, _ = call(capsys, "partition", path("d_sweedler"), path("trivial_frob"), "--pims", "0,2",
                        "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    res = obj["results"]
    assert res["pims"] == ["P0", "P2"]
    assert res["table"] == res["cartan"]
    assert len(res["table"]) == 2


def test_bulk_reports_invariant_dimension(capsys):
    code, out, _ = call(capsys, "bulk", path("d_z2"), path("trivial_frob"))
    assert code == EXIT_OK
    assert "dim bulk-invariants = 4" in out.splitlines()
    assert "dim end = 4" in out and "dim bulk = 4" in out


def test_verify_hopf_semisimple_double(capsys):
    code, out, _ = call(capsys, "verify", "hopf", path("d_z2"))
    assert code == EXIT_OK
    assert out.rstrip().endswith("status: all hard checks pass")


def test_verify_hopf_on_non_ribbon_double_fails_only_the_ribbon_check(capsys):
    code, out, _ = call(capsys, "verify", "hopf", path("d_sweedler"), "--format", "json")
    obj = json.loads(out)
    assert code == EXIT_FAIL
    assert [c["check_id"] for c in obj["checks"] if c["status"] == "fail"] == ["ribbon_antipode"]


def test_verify_frobenius(capsys):
    code, _, _ = call(capsys, "verify", "frobenius", path("d_z2"), path("d_z2_end_s1x2"))
    assert code == EXIT_OK
    code, out, _ = call(capsys, "verify", "frobenius", path("d_z2"), path("d_z2_end_s1x2_unnormalized"))
    assert code == EXIT_FAIL
    assert "fail" in out


def test_bulk_on_unnormalized_algebra_fails(capsys):
    code, out, _ = call(capsys, "bulk", path("d_z2"), path("d_z2_end_s1x2_unnormalized"))
    assert code == EXIT_FAIL
    assert "mult o comult = 2 id" in out


def test_classfn_outputs(capsys):
    code, out, _ = call(capsys, "classfn", path("d_z2"), path("trivial_frob"), "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["schema"] == "report-v1"
    assert len(obj["results"]["zeta"]) == 4
    code, out, _ = call(capsys, "classfn", path("d_z2"), path("d_z2_end_s1x2"), "--genus0", "3")
    assert code == EXIT_OK


def test_schema_violation_exits_2_before_computing(capsys, tmp_path):
    obj = json.loads(fixture_path("d_z2").read_text())
    obj["mult"] = "nope"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    code, out, err = call(capsys, "bulk", str(bad), path("trivial_frob"))
    assert code == EXIT_DATA
    assert out == "" and "mult" in err


def test_frobenius_file_for_another_hopf_algebra_exits_2(capsys):
    code, _, err = call(capsys, "bulk", path("d_sweedler"), path("d_z2_end_s1x2"))
    assert code == EXIT_DATA
    assert "hopf_ref" in err


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, _ = call(capsys, "verify", "hopf", str(tmp_path / "none.json"))
    assert code == EXIT_DATA


def test_bad_pims_selection_exits_2(capsys):
    code, _, _ = call(capsys, "partition", path("d_z2"), path("trivial_frob"), "--pims", "0,9")
    assert code == EXIT_DATA


@pytest.mark.parametrize("argv", [
    ["partition", "d_sweedler", "d_sweedler_end_s1x2"],
    ["bulk", "d_z2", "d_z2_end_s1x2"],
])
def test_machine_reports_identical_across_thread_counts(capsys, argv):
    command, *names = argv
    outs = []
    for threads in ("1", "2", "3"):
        code, out, _ = call(capsys, command, *[path(n) for n in names], "--format", "json", "--threads", threads)
        assert code == EXIT_OK
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_threads_default_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("BULKCOR_THREADS", "2")
    code, out, _ = call(capsys, "partition", path("d_z2"), path("trivial_frob"), "--format", "json")
    assert code == EXIT_OK
    monkeypatch.setenv("BULKCOR_THREADS", "1")
    assert call(capsys, "partition", path("d_z2"), path("trivial_frob"), "--format", "json")[1] == out


def test_field_order_override(capsys):
    code, out, _ = call(capsys, "bulk", path("d_z2"), path("trivial_frob"), "--field-order", "3")
    assert code == EXIT_OK
    assert "dim bulk-invariants = 4" in out


def test_run_returns_structured_outcome():
    out = run(JobSpec("bulk", [path("d_z2"), path("trivial_frob")], {"threads": 1}))
    assert out.exit_code == EXIT_OK
    assert out.results["dim_bulk"] == 4


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bulkcor", "verify", "hopf", path("d_z2"), "--format", "json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == EXIT_OK
    assert json.loads(proc.stdout)["ok"] is True
