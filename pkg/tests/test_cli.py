import json
import random

from multicover.tables import table_to_json
from multicover.transforms import gv_forward
from multicover.verify import random_bps_table


def test_series_json(cli_run):
    code, out, _ = cli_run("series", "--order", "3", "--exponent", "-2")
    assert code == 0
    assert json.loads(out) == ["1", "1/12", "1/240", "1/6048"]
    code, out, _ = cli_run("series", "Q", "--order", "2", "--format", "csv")
    assert out.splitlines() == ["h,value", "0,0", "1,1/24", "2,1/2880"]


def test_contrib_p3_line(cli_run):
    code, out, _ = cli_run("contrib", "--genus", "0", "--anti-k", "4", "--max-h", "2", "--d", "1")
    assert code == 0
    rows = {r["h"]: r["value"] for r in json.loads(out)["rows"]}
    assert rows[1] == "-1/12"


def test_contrib_multiple_covers(cli_run):
    _, out, _ = cli_run("contrib", "--genus", "1", "--max-h", "1", "--d", "4")
    rows = json.loads(out)["rows"]
    assert rows[0]["value"] == "7/4" and rows[1]["value"] == "0"
    _, out, _ = cli_run("contrib", "--genus", "1", "--max-h", "0", "--d", "4", "--model", "mtheory")
    assert json.loads(out)["rows"][0]["value"] == "1/4"
    _, out, _ = cli_run("contrib", "--genus", "2", "--max-h", "1", "--d", "2")
    assert json.loads(out)["rows"][1] == {"h": 1, "value": None, "defined": False}


def test_contrib_usage_errors(cli_run):
    code, _, err = cli_run("contrib", "--genus", "0", "--anti-k", "4", "--max-h", "1", "--d", "2")
    assert code == 2 and "error" in err
    code, _, _ = cli_run("contrib", "--genus", "-1", "--max-h", "1")
    assert code == 2
    code, _, _ = cli_run("nonsense")
    assert code == 2


def test_hodge_faber(cli_run):
    code, out, _ = cli_run("hodge", "faber", "--max-q", "5")
    doc = json.loads(out)
    assert code == 0 and doc["all_equal"]
    assert [r["q"] for r in doc["rows"]] == [2, 3, 4, 5]
    assert set(doc["rows"][0]) == {"q", "alpha", "kappa_integral", "ratio", "expected", "equal"}
    assert doc["rows"][1]["ratio"] == "2/3"


def test_hodge_psi_lambda_and_decimal(cli_run):
    _, out, _ = cli_run("hodge", "psi-lambda", "--max-h", "1", "--decimal", "4")
    rows = json.loads(out)["rows"]
    assert rows[0]["value"] == {"exact": "1/24", "approx": "~0.04167"}


def test_gv_invert_round_trip(cli_run, tmp_path):
    bps = random_bps_table(random.Random(1))
    path = tmp_path / "gw.json"
    path.write_text(json.dumps(table_to_json(gv_forward(bps))))
    code, out, _ = cli_run("gv", "invert", "--input", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["integrality_report"] == []
    assert doc["entries"] == table_to_json(bps)["entries"]


def test_gv_forward_then_invert_files(cli_run, tmp_path):
    src = tmp_path / "bps.json"
    src.write_text(json.dumps({"rank": 1, "max_genus": 1, "degree_cutoffs": [3],
                               "entries": [{"genus": 0, "class": [1], "value": "1"}]}))
    code, out, _ = cli_run("gv", "forward", "--input", str(src))
    assert code == 0
    vals = {(e["genus"], tuple(e["class"])): e["value"] for e in json.loads(out)["entries"]}
    assert vals[(0, (2,))] == "1/8" and vals[(1, (3,))] == "1/36"
    code, csv_out, _ = cli_run("gv", "forward", "--input", str(src), "--format", "csv")
    assert csv_out.splitlines()[0] == "genus,class,value"


def test_gv_integrality_report_cli(cli_run, tmp_path):
    src = tmp_path / "gw.json"
    src.write_text(json.dumps({"rank": 1, "max_genus": 0, "degree_cutoffs": [2],
                               "entries": [{"genus": 0, "class": [1], "value": "1"}]}))
    _, out, _ = cli_run("gv", "invert", "--input", str(src))
    assert json.loads(out)["integrality_report"] == [{"genus": 0, "class": [2], "value": "-1/8"}]


def test_enum_cli(cli_run, tmp_path):
    src = tmp_path / "e.json"
    src.write_text(json.dumps({"rank": 1, "canonical": [4], "max_genus": 1, "degree_cutoffs": [2],
                               "entries": [{"genus": 0, "class": [2], "value": "1"}]}))
    code, out, _ = cli_run("enum", "forward", "--input", str(src))
    assert code == 0
    fwd = tmp_path / "gw.json"
    fwd.write_text(out)
    vals = {(e["genus"], tuple(e["class"])): e["value"] for e in json.loads(out)["entries"]}
    assert vals[(1, (2,))] == "-1/4"
    _, back, _ = cli_run("enum", "solve", "--input", str(fwd))
    assert json.loads(back)["entries"] == [{"genus": 0, "class": [2], "value": "1"}]


def test_domain_errors_exit_one(cli_run, tmp_path):
    code, _, err = cli_run("gv", "invert", "--input", str(tmp_path / "nope.json"))
    assert code == 1 and "cannot read" in err and len(err.strip().splitlines()) == 1
    dup = tmp_path / "dup.json"
    entry = {"genus": 0, "class": [1], "value": "1"}
    dup.write_text(json.dumps({"rank": 1, "max_genus": 0, "degree_cutoffs": [2],
                               "entries": [entry, entry]}))
    code, _, err = cli_run("gv", "invert", "--input", str(dup))
    assert code == 1 and "entry 1" in err
    nocanon = tmp_path / "nc.json"
    nocanon.write_text(json.dumps({"rank": 1, "max_genus": 0, "degree_cutoffs": [2], "entries": []}))
    code, _, err = cli_run("enum", "solve", "--input", str(nocanon))
    assert code == 1 and "canonical" in err


def test_output_is_byte_stable(cli_run):
    a = cli_run("hodge", "alpha", "--max-q", "6")[1]
    b = cli_run("hodge", "alpha", "--max-q", "6")[1]
    assert a == b


def test_verify_subset(cli_run):
    code, out, _ = cli_run("verify", "--suite", "faber_ratio", "--suite", "P3_correction_coefficients")
    doc = json.loads(out)
    assert code == 0 and doc["failed"] == 0 and doc["passed"] == 2


def test_verify_full_suite(cli_run):
    code, out, _ = cli_run("verify", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "suite,checked,passed"
    assert all(line.endswith(",true") for line in lines[1:])
