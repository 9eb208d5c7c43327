import csv
import io
import json

import pytest

from lefschetz.cli import CSV_COLUMNS, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    return code, json.loads(out) if out else None, err


def test_check():
    code, data, _ = call_json("check", "--sequence", "1,3,6,6,3")
    assert code == 0 and data["is_wls"] is True and data["unimodality_index"] == 2


def test_check_expect_wls_fails():
    code, data, _ = call_json("check", "--sequence", "1,2,4", "--expect-wls")
    assert code == 1 and data["is_wls"] is False and data["first_violation_degree"] == 2


def test_check_without_expectation_is_zero():
    assert call("check", "--sequence", "1,2,4")[0] == 0


def test_ci():
    code, data, _ = call_json("ci", "--degrees", "2,2,3")
    assert code == 0
    assert data == {"hf": [1, 3, 4, 3, 1], "delta": [1, 2, 1, -1, -2, -1], "theta": 7,
                    "lambda": 2, "delta_at_lambda": 1}


def test_gor():
    code, data, _ = call_json("gor", "--degrees", "2,2,4,4,6")
    assert code == 0
    assert data["theta"] == 9 and data["b_set"] == [3] and data["mci"] == [2, 4, 6]
    assert data["reduced"] is True and data["hf"][0] == 1


def test_mci_and_reduce():
    assert call_json("mci", "--degrees", "2,2,2,3,3")[1] == {"b_set": [], "c_set": [4], "mci": [2, 2, 3]}
    assert call_json("reduce", "--degrees", "2,2,3,4,5")[1] == {"reduced_degrees": [2, 2, 4],
                                                               "hf_preserved": True}


def test_link():
    code, data, _ = call_json("link", "--ci", "2,2,3", "--gor", "2,2,2")
    assert code == 0
    assert data["hq"] == [1, 2, 1] and data["tau"] == 4
    assert data["e_degrees"] == [1, 2, 2, 3] and data["normalized"] is True
    assert data["wls"]["is_wls"] is True


def test_monomial_hf():
    code, data, _ = call_json("monomial-hf", "--gens", "3:0:0,0:3:0,0:0:3,1:1:1")
    assert code == 0 and data["hf"] == [1, 3, 6, 6, 3] and data["wls"]["is_wls"]


@pytest.mark.parametrize("argv, needle", [
    (("gor", "--degrees", "3,3,3,3,3"), "NonIntegerTheta"),
    (("gor", "--degrees", "3,2,2"), "NotSorted"),
    (("ci", "--degrees", "3,2,2"), "NotSorted"),
    (("ci", "--degrees", "2,-1,3"), "NegativeEntry"),
    (("link", "--ci", "2,2,2", "--gor", "2,2,2,3,3"), "RegorEmpty"),
    (("link", "--ci", "2,2,2", "--gor", "2,2,2"), "TrivialLink"),
    (("monomial-hf", "--gens", "1:1:0"), "NotArtinian"),
    (("check", "--sequence", "2,1"), "InvalidHilbertFunction"),
    (("check", "--sequence", "1,x"), "usage"),
    (("frobnicate",), "usage"),
    (("sweep", "--d-max", "3"), "usage"),
])
def test_errors_are_one_line_exit_two(argv, needle):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert needle in err
    assert err.count("\n") == 1


def test_sweep_stdout_and_files(tmp_path):
    out_file, csv_file = tmp_path / "r.json", tmp_path / "r.csv"
    code, summary, _ = call_json("sweep", "--d-max", "3", "--m-max", "2", "--offset", "2",
                                 "--workers", "1", "--out", str(out_file), "--csv", str(csv_file))
    assert code == 0 and summary["failures"] == 0
    report = json.loads(out_file.read_text())
    assert report["pairs_checked"] == summary["pairs_checked"] > 0
    assert report["config"] == {"d_max": 3, "m_max": 2, "alpha_offset": 2, "enforce_normalization": True}
    rows = list(csv.reader(csv_file.open()))
    assert rows[0] == CSV_COLUMNS and len(rows) == report["pairs_checked"] + 1


def test_sweep_failure_exit_code():
    code, report, _ = call_json("sweep", "--d-max", "5", "--m-max", "2", "--offset", "1", "--workers", "1")
    assert code == 1 and report["failures"]


def test_sweep_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"d_max": 3, "m_max": 1, "alpha_offset": 1}))
    code, report, _ = call_json("sweep", "--config", str(cfg), "--workers", "1")
    assert code == 0 and report["config"]["d_max"] == 3
    code, report, _ = call_json("sweep", "--config", str(cfg), "--d-max", "2", "--no-normalization",
                                "--workers", "1")
    assert report["config"] == {"d_max": 2, "m_max": 1, "alpha_offset": 1, "enforce_normalization": False}


def test_output_is_canonical():
    a = call("gor", "--degrees", "3,3,4,4,4")[1]
    b = call("gor", "--degrees", "3,3,4,4,4")[1]
    assert a == b
    assert a.strip() == json.dumps(json.loads(a), sort_keys=True)


def test_sweep_reports_identical_except_elapsed():
    args = ("sweep", "--d-max", "5", "--m-max", "2", "--workers", "1")
    a, b = call_json(*args)[1], call_json(*args)[1]
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b
