import json

import pytest

from zigzag import cli
from zigzag.cli import Mismatch, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_euler_example(capsys):
    code, out, _ = run(capsys, "euler", "--max", "4")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["value"] for r in records] == ["1", "1", "1", "2", "5"]
    assert all(r["route"] == "boustrophedon" for r in records)
    assert [r["index"] for r in records] == [0, 1, 2, 3, 4]


def test_fm_csv_example(capsys):
    code, out, _ = run(capsys, "fm", "--m", "2", "--order", "8", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "command,parameters,index,value,route"
    values = [line.split(",")[3] for line in lines[1:]]
    assert values == ["1", "1", "1", "2", "5", "17", "72", "367", "2179"]


def test_csv_uses_crlf(capsys):
    code, out, _ = run(capsys, "euler", "--max", "2", "--format", "csv")
    assert code == 0
    assert out.count("\r\n") == 4  # header + three records


def test_shape_with_skew_inner(capsys):
    code, out, _ = run(capsys, "shape", "--lambda", "2,2,1", "--skew-inner", "1")
    assert code == 0
    record = json.loads(out)
    # this skew shape pairs with itself to count w with w and w^-1
    # both alternating, and there are two such in S_4
    assert record["value"] == "2"
    assert record["index"] == 4


def test_rational_serialization(capsys):
    code, out, _ = run(capsys, "asy", "--kind", "c", "--terms", "3")
    assert code == 0
    values = [json.loads(line)["value"] for line in out.splitlines()]
    assert values == ["1", "-1/6", "23/360", "-1493/45360"]


def test_doubly_crosschecks_in_parameters(capsys):
    code, out, _ = run(capsys, "doubly", "--n", "6", "--variant", "alt_ralt")
    assert code == 0
    record = json.loads(out)
    assert record["value"] == "6"
    assert record["parameters"]["crosscheck-partition-sum"] == "6"
    assert record["parameters"]["crosscheck-series"] == "6"


def test_multiset_defaults_to_empty_subset(capsys):
    code, out, _ = run(capsys, "multiset", "--alpha", "3,3,3")
    assert code == 0
    assert json.loads(out)["value"] == "30"


def test_conjecture_records(capsys):
    code, out, _ = run(capsys, "conjecture", "--max", "6")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert all(r["parameters"]["equal"] == "true" for r in records)
    assert {r["route"] for r in records} == {
        "alt-top-index",
        "alt-top-value",
        "ralt-top-index",
        "ralt-top-value",
    }


def test_bad_partition_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["shape", "--lambda", "2,3"])
    assert exc.value.code == 2
    assert "non-increasing" in capsys.readouterr().err


def test_nonpositive_part_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cycle", "--rho", "3,0"])
    assert exc.value.code == 2


def test_library_value_error_exits_2(capsys):
    code, _, err = run(capsys, "staircase", "--m", "1")
    assert code == 2
    assert "m >= 2" in err


def test_subset_out_of_range_exits_2(capsys):
    code, _, err = run(capsys, "multiset", "--alpha", "2,1", "--A", "3")
    assert code == 2
    assert "subset" in err


def test_verify_routes_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "routes", "--max-n", "5")
    assert code == 0
    names = [json.loads(line)["route"] for line in out.splitlines()]
    assert names == [
        "doubly-routes",
        "staircase-vs-shape",
        "square-routes",
        "ncycle-vs-cycle",
        "fm-vs-cycle",
        "indicator-vs-cycle",
    ]


def test_verify_oracle_suite_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--max-n", "4")
    assert code == 0
    assert len(out.splitlines()) == 8


def test_verify_mismatch_exits_1(capsys, monkeypatch):
    def broken(bound, seed):
        raise Mismatch("fake-check", "n=1: 0 != 1")

    monkeypatch.setitem(cli._SUITES, "routes", [("fake-check", broken)])
    code, out, err = run(capsys, "verify", "--suite", "routes")
    assert code == 1
    assert "FAIL" in err and "fake-check" in err
    assert out == ""


def test_verify_library_error_counts_as_failure(capsys, monkeypatch):
    def tripping(bound, seed):
        raise ValueError("route disagreement: 3 != 4")

    monkeypatch.setitem(cli._SUITES, "routes", [("tripping", tripping)])
    code, _, err = run(capsys, "verify", "--suite", "routes")
    assert code == 1
    assert "tripping" in err


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "fixed", "--max", "5", "--format", "csv")
    _, second, _ = run(capsys, "fixed", "--max", "5", "--format", "csv")
    assert first == second


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
