import json

import pytest

from yhecke import cli


def run(capsys, argv):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    records = [json.loads(line) for line in out.splitlines() if line]
    return code, records, err


def test_rank(capsys):
    code, records, _ = run(capsys, ["rank", "--d", "2", "--n", "3"])
    assert code == 0
    assert records[0]["computed"] == 48 == records[0]["formula"]

    code, records, _ = run(capsys, ["rank", "--d", "2", "--n", "3",
                                    "--group", "sd"])
    assert code == 0 and records[0]["computed"] == 24

    code, records, _ = run(capsys, ["rank", "--d", "4", "--n", "2",
                                    "--group", "zp", "--p", "2"])
    assert code == 0 and records[0]["computed"] == 16


def test_rank_usage_errors(capsys):
    code, _, _ = run(capsys, ["rank", "--d", "2", "--n", "0"])
    assert code == 2
    code, _, _ = run(capsys, ["rank", "--d", "2", "--n", "2",
                              "--group", "zp"])
    assert code == 2


def test_mul(capsys):
    code, records, _ = run(capsys, ["mul", "e1", "e1", "--d", "2", "--n", "2"])
    assert code == 0
    assert records[0]["product"] == "(1) * E{1,2|} + (1) * E{|1,2}"

    code, records, _ = run(capsys, ["mul", "t1", "t1", "--d", "2", "--n", "2",
                                    "--mode", "cyc"])
    assert code == 0
    # t1^2 = 1: the sum of all idempotents
    assert records[0]["product"].count("E{") == 4

    code, _, _ = run(capsys, ["mul", "g1 +", "g1", "--d", "2", "--n", "2"])
    assert code == 2


def test_verify(capsys):
    code, records, _ = run(capsys, ["verify", "--relset", "BT",
                                    "--assign", "phi", "--d", "3", "--n", "3"])
    assert code == 0
    assert all(r["status"] == "pass" for r in records)
    # mismatched relation set and assignment: unknown generators fail
    code, records, _ = run(capsys, ["verify", "--relset", "BT",
                                    "--assign", "identity",
                                    "--d", "2", "--n", "2"])
    assert code == 1


def test_psi_check(capsys):
    code, records, _ = run(capsys, ["psi-check", "--d", "2", "--n", "2",
                                    "--tier", "exact"])
    assert code == 0
    assert records[0]["exact_rank"] == 8

    code, records, _ = run(capsys, ["psi-check", "--d", "2", "--n", "2",
                                    "--tier", "quick", "--seed", "5"])
    assert code == 0
    assert "probabilistic" in records[0]["note"]


def test_simples(capsys):
    code, records, _ = run(capsys, ["simples", "--d", "2", "--n", "2",
                                    "--group", "sd", "--dims"])
    assert code == 0
    rows = [r for r in records if r["check"] == "simple"]
    assert len(rows) == 4 and all(r["dim"] == 1 for r in rows)
    total = [r for r in records if r["check"] == "simples-total"][0]
    assert total["sum_of_squares"] == "4"

    code, records, _ = run(capsys, ["simples", "--d", "2", "--n", "2",
                                    "--e", "2"])
    rows = [r for r in records if r["check"] == "simple"]
    assert code == 0 and len(rows) == 3


def test_fixed_basis(capsys):
    code, records, _ = run(capsys, ["fixed-basis", "--d", "2", "--n", "2",
                                    "--group", "zp", "--p", "2"])
    assert code == 0
    size = [r for r in records if r["check"] == "fixed-basis-size"][0]
    assert size["size"] == 4


def test_sweep_quick(capsys):
    code, records, _ = run(capsys, ["sweep", "--quick"])
    assert code == 0
    assert all(r["status"] == "pass" for r in records)
