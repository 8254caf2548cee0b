from __future__ import annotations

import csv
import io
import json

import jsonschema
import pytest

from steinerdiam.cli import main
from steinerdiam.graph6 import decode
from steinerdiam.report import SCHEMA


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_props(capsys):
    code, out, _ = run(capsys, "construct", "cycle:9", "--props")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "HhCGGE@"
    assert "sdiam3=6" in lines


def test_extremal_json_and_csv_agree(capsys):
    code, out, _ = run(capsys, "extremal", "-n", "6", "-l", "4", "-d", "3")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["results"]["value"] == 7
    _, out_csv, _ = run(capsys, "extremal", "-n", "6", "-l", "4", "-d", "3", "--format", "csv")
    (row,) = list(csv.DictReader(io.StringIO(out_csv)))
    assert int(row["value"]) == doc["results"]["value"]
    assert int(row["graphs_examined"]) == doc["results"]["graphs_examined"]
    assert row["witnesses"].split() == doc["results"]["witnesses"]


def test_infinity_serialisation(capsys):
    _, out, _ = run(capsys, "extremal", "-n", "5", "-l", "3", "-d", "2")
    doc = json.loads(out)
    assert doc["results"]["value"] == "inf"
    jsonschema.validate(doc, SCHEMA)
    _, out_csv, _ = run(capsys, "extremal", "-n", "5", "-l", "3", "-d", "2", "--format", "csv")
    assert list(csv.DictReader(io.StringIO(out_csv)))[0]["value"] == "inf"


def test_reports_byte_identical_without_timing(capsys):
    outs = [run(capsys, "extremal", "-n", "7", "-l", "3", "-d", "4")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    _, timed, _ = run(capsys, "extremal", "-n", "7", "-l", "3", "-d", "4", "--timing")
    doc = json.loads(timed)
    assert "meta" in doc
    del doc["meta"]
    assert json.dumps(doc, indent=2) + "\n" == outs[0]


def test_shard_merge(capsys, tmp_path):
    paths = []
    for i in range(3):
        p = tmp_path / f"s{i}.json"
        assert main(["extremal", "-n", "7", "-l", "3", "-d", "4", "--shards", "3", "--shard", str(i),
                     "-o", str(p)]) == 0
        paths.append(str(p))
    capsys.readouterr()
    code, out, _ = run(capsys, "merge", *paths)
    merged = json.loads(out)
    _, full, _ = run(capsys, "extremal", "-n", "7", "-l", "3", "-d", "4", "--shards", "3")
    full = json.loads(full)
    assert code == 0
    assert merged["results"]["value"] == full["results"]["value"] == 8
    assert merged["results"]["witnesses"] == full["results"]["witnesses"]
    assert merged["results"]["witness_total"] == full["results"]["witness_total"]
    code, _, err = run(capsys, "merge", *paths[:2])
    assert code == 2 and "missing" in err


def test_sdiam_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "sdiam", "-k", "2", stdin="Bw\nA?\n", monkeypatch=monkeypatch)
    assert code == 0 and out.split() == ["1", "inf"]


def test_steiner(capsys):
    code, out, _ = run(capsys, "steiner", "E?~o", "-t", "0,2,4", "--witness")
    assert code == 0 and out.splitlines()[0] == "2"
    for method in ("median", "dp", "oracle"):
        assert run(capsys, "steiner", "E?~o", "-t", "0,2,4", "--method", method)[1].strip() == "2"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "6", "--count")
    assert code == 0 and out.strip() == "112"
    _, out, _ = run(capsys, "enumerate", "-n", "5", "-l", "2")
    graphs = [decode(line) for line in out.split()]
    # path and cycle
    assert sorted(g.edge_count for g in graphs) == [4, 5]
    assert all(max(g.degrees()) == 2 for g in graphs)


@pytest.mark.parametrize(
    "argv, code",
    [
        (["bogus"], 2),
        (["construct", "cycle:2"], 2),
        (["sdiam", "/nonexistent"], 2),
        (["steiner", "A", "-t", "0,1"], 2),
        (["extremal", "-n", "13", "-l", "3", "-d", "4"], 3),
        (["enumerate", "-n", "13"], 3),
        (["extremal", "-n", "6", "-l", "9", "-d", "3"], 2),
        (["verify"], 2),
        (["verify", "NOPE"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code


def test_verify_all_exit_zero_with_warning(capsys):
    code, out, err = run(capsys, "verify", "--all", "--n-max", "7")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["results"]["discrepancies"] == ["THM_4_2"]
    assert "WARNING" in err and "THM_4_2" in err


def test_verify_csv_matches_json(capsys):
    _, js, _ = run(capsys, "verify", "PROP_3_1", "--n-max", "6")
    _, cs, _ = run(capsys, "verify", "PROP_3_1", "--n-max", "6", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(cs)))
    jrows = json.loads(js)["results"]["claims"][0]["rows"]
    assert len(rows) == len(jrows)
    for a, b in zip(rows, jrows):
        assert int(a["expected"]) == b["expected"] and int(a["computed"]) == b["computed"]


def test_verify_failure_exit_one(capsys):
    # the stated value at (8,3,4) disagrees with the exhaustive search
    code, out, _ = run(capsys, "verify", "THM_4_3", "--n-max", "8")
    assert code == 1
    assert json.loads(out)["results"]["status"] == "fail"
