import csv
import io
import json

import pytest

from cliffgroups import tables
from cliffgroups.enumerator import enumerate_taxonomy

# transcribed reference rows: (n, target, pattern, sign[, name])
TABLE1 = [
    (0, "C(0,0)", "{±1}", "+", "Seraphim"),
    (1, "C(1,0)", "E_a", "+", "Cherubim"),
    (1, "C(0,1)", "E_ab", "-", "Thrones"),
    (1, "C(0,1)", "E_abc", "-", "Virtues"),
    (2, "C(2,0)", "E_a E_b", "++", "Dominations"),
    (2, "C(1,1)", "E_a E_ab", "+-", "Powers"),
    (2, "C(0,2)", "E_ab E_ac", "--", "Principalities"),
    (3, "C(3,0)", "E_a E_b E_c", "+++", "Archangels"),
    (3, "C(1,2)", "E_a E_ab E_ac", "+--", "Angels"),
]
MODES = {2: ["{±1}"], 3: ["E_a", "E_ab", "E_abc"], 4: ["E_a E_b", "E_a E_ab", "E_ab E_ac"],
         5: ["E_a E_b E_c", "E_a E_ab E_ac"]}

# (n, target, pattern, sign, disorder, chord, beat)
TABLE6 = [
    (1, "C(1,0)", "{1,e_a}", "+", 1, "", ""),
    (2, "C(1,1)", "E_a E_bc", "+-", 0, "(1,1)", "2/2"),
    (2, "C(1,1)", "E_a E_abc", "+-", 0, "(1,1)", "2/2"),
    (2, "C(0,2)", "E_ab E_abc", "--", 0, "(1,1)", "2/2"),
    (3, "C(2,1)", "E_a E_b E_ab", "++-", 1, "(0,0,0)", "0/6"),
    (3, "C(2,1)", "E_a E_b E_ac", "++-", 0, "(0,1,1)", "2/6"),
    (3, "C(2,1)", "E_a E_b E_abc", "++-", 0, "(1,1,2)", "4/6"),
    (3, "C(1,2)", "E_a E_ab E_bc", "+--", 0, "(1,0,1)", "2/6"),
    (3, "C(1,2)", "E_a E_ab E_abc", "+--", 0, "(1,1,2)", "4/6"),
    (3, "C(1,2)", "E_a E_bc E_abc", "+--", 1, "(2,2,2)", "6/6"),
    (3, "C(0,3)", "E_ab E_ac E_bc", "---", 1, "(0,0,0)", "0/6"),
    (3, "C(0,3)", "E_ab E_ac E_abc", "---", 0, "(1,1,2)", "4/6"),
]
RHYTHMS = {
    7: ["{1,e_a}"],
    8: ["E_a E_bc", "E_a E_abc", "E_ab E_abc", "E_a E_bc E_abc"],
    9: ["E_a E_b E_ab"],
    10: ["E_a E_b E_ac", "E_a E_b E_abc", "E_a E_ab E_bc", "E_a E_ab E_abc", "E_ab E_ac E_abc"],
}


def band_tuple(row):
    return (row["n"], row["≇"], row["Band"], row["Sign"], row["Φ"], row["X"], row["B"])


def test_table1(report3):
    rows = tables.table_rows(report3, 1)
    assert [(r["n"], r["≅"], r["Choir"], r["Sign"], r["Name"]) for r in rows] == TABLE1


@pytest.mark.parametrize("table_id", [2, 3, 4, 5])
def test_mode_tables(report3, table_id):
    rows = tables.table_rows(report3, table_id)
    assert [r["Choir"] for r in rows] == MODES[table_id]
    t1 = {r[2]: r for r in TABLE1}
    for r in rows:
        assert (r["n"], r["≅"], r["Sign"]) == (t1[r["Choir"]][0], t1[r["Choir"]][1], t1[r["Choir"]][3])


def test_table6(report3):
    assert [band_tuple(r) for r in tables.table_rows(report3, 6)] == TABLE6


@pytest.mark.parametrize("table_id", [7, 8, 9, 10])
def test_rhythm_tables(report3, table_id):
    rows = tables.table_rows(report3, table_id)
    assert [r["Band"] for r in rows] == RHYTHMS[table_id]
    t6 = {r[2]: r for r in TABLE6}
    assert [band_tuple(r) for r in rows] == [t6[p] for p in RHYTHMS[table_id]]


def test_rhythm_footnotes(report3):
    text = tables.render_text(report3, 8)
    notes = [line for line in text.splitlines() if line.startswith("#")]
    assert any("E_ab E_ac E_bc" in line for line in notes)
    assert any("E_bc E_abc" in line for line in notes)
    assert "# " not in tables.render_text(report3, 6)


def test_table3_footnote(report3):
    assert "#" in tables.render_text(report3, 3)


def test_bad_id(report3):
    for bad in (0, 11):
        with pytest.raises(tables.TableError):
            tables.table_rows(report3, bad)


def test_needs_cl3_report():
    with pytest.raises(tables.TableError):
        tables.table_rows(enumerate_taxonomy(2, 2), 1)


def test_csv_and_json(report3):
    rows = list(csv.DictReader(io.StringIO(tables.render_csv(report3, 6))))
    assert len(rows) == 12
    assert rows[9]["Band"] == "E_a E_bc E_abc"
    doc = json.loads(tables.render_json(report3, 1))
    assert doc["columns"] == ["n", "≅", "Choir", "Sign", "Name"]
    assert doc["rows"][0]["Name"] == "Seraphim"
