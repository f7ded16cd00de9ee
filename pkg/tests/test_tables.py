import json
from fractions import Fraction

import pytest

from multicover.tables import (
    BPSTable,
    GWTable,
    TableError,
    classes_in_box,
    divisors_of_class,
    load_table,
    table_from_json,
    table_to_csv,
    table_to_json,
)

DOC = {
    "rank": 2,
    "canonical": [1, 2],
    "max_genus": 1,
    "degree_cutoffs": [2, 1],
    "entries": [
        {"genus": 0, "class": [1, 0], "value": "6/4"},
        {"genus": 1, "class": [2, 1], "value": "-11/720"},
    ],
}


def test_json_round_trip():
    t = table_from_json(DOC)
    assert t[0, (1, 0)] == Fraction(3, 2)
    assert t[1, (0, 1)] == 0
    out = table_to_json(t)
    assert out["entries"][0]["value"] == "3/2"
    assert table_from_json(json.loads(json.dumps(out))).same_support(t)
    assert out["canonical"] == [1, 2]


def test_bps_json_has_integrality_section():
    t = BPSTable(1, 0, (3,), {(0, (1,)): Fraction(1), (0, (2,)): Fraction(-1, 8)})
    out = table_to_json(t)
    assert out["integrality_report"] == [{"genus": 0, "class": [2], "value": "-1/8"}]


def test_csv_layout():
    text = table_to_csv(table_from_json(DOC))
    assert text.splitlines() == ["genus,class,value", "0,1;0,3/2", "1,2;1,-11/720"]


@pytest.mark.parametrize("mutate, message", [
    (lambda d: d["entries"].append(dict(d["entries"][0])), "duplicate"),
    (lambda d: d["entries"].append({"genus": 0, "class": [1], "value": "1"}), "rank"),
    (lambda d: d["entries"].append({"genus": 0, "class": [0, 0], "value": "1"}), "zero class"),
    (lambda d: d["entries"].append({"genus": 0, "class": [3, 0], "value": "1"}), "cutoffs"),
    (lambda d: d["entries"].append({"genus": 2, "class": [1, 1], "value": "1"}), "genus"),
    (lambda d: d["entries"].append({"genus": 0, "class": [1, 1], "value": "1/0"}), "entry 2"),
    (lambda d: d.pop("rank"), "rank"),
    (lambda d: d.update(canonical=[-5, 0]), "canonical pairing"),
    (lambda d: d.update(degree_cutoffs=[2]), "rank"),
])
def test_load_errors(mutate, message):
    doc = json.loads(json.dumps(DOC))
    mutate(doc)
    with pytest.raises(TableError, match=message):
        table_from_json(doc)


def test_load_table_file_errors(tmp_path):
    with pytest.raises(TableError, match="cannot read"):
        load_table(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(TableError, match="malformed JSON"):
        load_table(str(bad))
    good = tmp_path / "good.json"
    good.write_text(json.dumps(DOC))
    assert isinstance(load_table(str(good), GWTable), GWTable)


def test_class_helpers():
    assert classes_in_box((2,)) == [(1,), (2,)]
    assert classes_in_box((1, 1)) == [(0, 1), (1, 0), (1, 1)]
    assert list(divisors_of_class((4, 6))) == [(1, (4, 6)), (2, (2, 3))]
    assert list(divisors_of_class((0, 3))) == [(1, (0, 3)), (3, (0, 1))]
