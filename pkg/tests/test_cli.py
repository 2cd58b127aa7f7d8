import csv
import json

import pytest

from planar_turan.cli import (
    EXIT_FAIL,
    EXIT_INCOMPLETE,
    EXIT_PASS,
    EXIT_USAGE,
    UsageError,
    main,
    parse_forbid,
    parse_pattern,
)
from planar_turan.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_with_edges,
)


def _run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_parse_pattern_shorthand():
    assert parse_pattern("C5") == cycle_graph(5)
    assert parse_pattern("P3") == path_with_edges(3)
    assert parse_pattern("P0") == path_with_edges(0)
    assert parse_pattern("K4") == complete_graph(4)
    assert parse_pattern("K2_3") == complete_bipartite(2, 3)
    assert parse_pattern("Dhc") == cycle_graph(5)
    with pytest.raises(UsageError):
        parse_pattern("C2")
    with pytest.raises(UsageError):
        parse_pattern("notagraph???")


def test_parse_forbid():
    assert parse_forbid(None).sorted_lengths == ()
    assert parse_forbid("C4").sorted_lengths == (4,)
    assert parse_forbid("C4,C6").sorted_lengths == (4, 6)
    assert parse_forbid("4, 6").sorted_lengths == (4, 6)
    with pytest.raises(UsageError):
        parse_forbid("C1")
    with pytest.raises(UsageError):
        parse_forbid("x")


def test_is_planar_exit_codes(capsys):
    code, payload = _run_json(capsys, ["is-planar", "--graph", "C5"])
    assert code == EXIT_PASS
    assert payload["planar"] is True
    code, payload = _run_json(capsys, ["is-planar", "--graph", "K5", "--witness"])
    assert code == EXIT_FAIL
    assert payload["planar"] is False
    assert payload["witness_kind"] == "K5"
    assert len(payload["witness_edges"]) == 10


def test_count_cycles_command(capsys):
    code, payload = _run_json(capsys, ["count-cycles", "--graph", "K4", "--k", "3"])
    assert code == EXIT_PASS
    assert payload["count"] == 4


def test_count_command(capsys):
    code, payload = _run_json(capsys, ["count", "--graph", "K4",
                                       "--pattern", "P3"])
    assert code == EXIT_PASS
    assert payload["count"] == 12
    assert payload["automorphisms"] == 2


def test_params_command(capsys):
    code, payload = _run_json(capsys, ["params", "--graph", "P6", "--ell", "2"])
    assert code == EXIT_PASS
    assert payload["beta"] == 1 + (6 + 1) // 3
    assert payload["degeneracy"] == 1
    assert "tree_partition" in payload
    assert payload["tree_partition"]["leaves"] == [0, 6]
    code, payload = _run_json(capsys, ["params", "--graph", "C6"])
    assert "tree_partition" not in payload
    assert payload["beta"] == 3


def test_construct_json(capsys):
    code, payload = _run_json(capsys, [
        "construct", "--family", "pentagon_extremal", "--params", "t=2,s=3"])
    assert code == EXIT_PASS
    assert payload["vertices"] == 17
    assert payload["certification"]["declared_count"] == 13
    assert payload["certification"]["computed_count"] == 13
    assert payload["certification"]["planar"] is True


def test_construct_graph6(capsys):
    code = main(["construct", "--family", "cycle_blowup", "--params", "k=4",
                 "--n", "20", "--format", "graph6"])
    assert code == EXIT_PASS
    text = capsys.readouterr().out.strip()
    g = parse_pattern(text)
    assert g.n == 20


def test_construct_with_tree_param(capsys):
    code, payload = _run_json(capsys, [
        "construct", "--family", "tree_beta_blowup",
        "--params", "tree=P2", "--n", "24"])
    assert code == EXIT_PASS
    assert payload["certification"]["declared_count"] == 36


def test_construct_usage_errors(capsys):
    assert main(["construct", "--family", "no_such"]) == EXIT_USAGE
    # missing k surfaces as a usage problem, not a stack trace
    assert main(["construct", "--family", "cycle_blowup", "--n", "16"]) == EXIT_USAGE
    assert main(["construct", "--family", "cycle_blowup",
                 "--params", "k=two", "--n", "16"]) == EXIT_USAGE
    capsys.readouterr()


def test_search_command(capsys):
    code, payload = _run_json(capsys, ["search", "--n", "5", "--pattern", "C5",
                                       "--forbid", "C4"])
    assert code == EXIT_PASS
    assert payload["max_count"] == 1
    assert payload["status"] == "complete"
    assert payload["n"] == 5
    assert payload["family"] == [4]


def test_search_incomplete_exit_code(capsys):
    code = main(["search", "--n", "7", "--pattern", "C5", "--forbid", "C4",
                 "--budget-seconds", "0.0000001"])
    capsys.readouterr()
    assert code == EXIT_INCOMPLETE


def test_search_connected_flag(capsys):
    code, payload = _run_json(capsys, ["search", "--n", "5", "--pattern", "C3",
                                       "--connected"])
    assert code == EXIT_PASS
    assert payload["max_count"] > 0


def test_verify_command(capsys):
    code, payload = _run_json(capsys, ["verify", "--claim", "beta-closed-forms"])
    assert code == EXIT_PASS
    assert payload["status"] == "pass"
    assert payload["details"] == []  # failures only unless --all-details
    assert payload["checks"] > 100
    code, payload = _run_json(capsys, ["verify", "--claim", "beta-closed-forms",
                                       "--all-details"])
    assert len(payload["details"]) > 100


def test_verify_unknown_claim(capsys):
    assert main(["verify", "--claim", "no-such-claim"]) == EXIT_USAGE
    capsys.readouterr()


def test_table_extremal(tmp_path, capsys):
    base = tmp_path / "sweep"
    code = main(["table", "--spec", "extremal n=4..6 pattern=C5 forbid=C4",
                 "--output", str(base)])
    capsys.readouterr()
    assert code == EXIT_PASS
    with open(f"{base}.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["n", "max_count", "graphs_explored", "status", "witnesses"]
    assert [(r[0], r[1]) for r in rows[1:]] == [("4", "0"), ("5", "1"), ("6", "1")]
    with open(f"{base}.json") as fh:
        data = json.load(fh)
    assert [r["max_count"] for r in data["rows"]] == [0, 1, 1]


def test_table_beta(tmp_path, capsys):
    base = tmp_path / "beta"
    code = main(["table", "--spec", "beta graph=path k=1..4 ell=1..2",
                 "--output", str(base)])
    capsys.readouterr()
    assert code == EXIT_PASS
    with open(f"{base}.json") as fh:
        data = json.load(fh)
    assert len(data["rows"]) == 8
    for row in data["rows"]:
        k, ell = row["k"], row["ell"]
        assert row["beta"] == 1 + (k + ell - 1) // (ell + 1)


def test_table_empty_range_writes_header_only(tmp_path, capsys):
    base = tmp_path / "empty"
    code = main(["table", "--spec", "beta graph=path k=2..1 ell=1..1",
                 "--output", str(base)])
    capsys.readouterr()
    assert code == EXIT_PASS
    with open(f"{base}.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows == [["k", "ell", "beta"]]


def test_table_usage_errors(capsys):
    assert main(["table", "--spec", "beta graph=cycle k=1..4 ell=1..1",
                 "--output", "/tmp/never"]) == EXIT_USAGE
    assert main(["table", "--spec", "unknown a=1", "--output", "/tmp/never"]) == EXIT_USAGE
    assert main(["table", "--spec", "extremal n=four", "--output", "/tmp/never"]) == EXIT_USAGE
    capsys.readouterr()


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code = main(["count", "--graph", "C5", "--pattern", "P2",
                 "--output", str(target)])
    capsys.readouterr()
    assert code == EXIT_PASS
    payload = json.loads(target.read_text())
    assert payload["count"] == 5


def test_argparse_errors_become_usage_exit(capsys):
    assert main([]) == EXIT_USAGE
    assert main(["is-planar"]) == EXIT_USAGE
    assert main(["count-cycles", "--graph", "K4", "--k", "three"]) == EXIT_USAGE
    assert main(["no-such-command"]) == EXIT_USAGE
    capsys.readouterr()
