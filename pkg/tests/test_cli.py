import json

import pytest
from click.testing import CliRunner

from pottsmotive.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def test_z_polygon_text(runner):
    result = runner.invoke(cli, ["z", "--family", "polygon", "--m", "2"])
    assert result.exit_code == 0
    assert (
        result.output.strip()
        == "q*t1*t2*t3 + q^3 + q^2*t1 + q^2*t2 + q^2*t3 + q*t1*t2 + q*t1*t3 + q*t2*t3"
    )


def test_z_which_selector(runner):
    result = runner.invoke(
        cli, ["z", "--family", "polygon", "--m", "2", "--which", "phi"]
    )
    assert result.exit_code == 0
    assert result.output.strip() == "t1*t2 + t1*t3 + t2*t3"


def test_z_from_file(runner, tmp_path):
    path = tmp_path / "edges.txt"
    path.write_text("V 3\n1 0 1\n2 1 2\n3 2 0\n")
    result = runner.invoke(cli, ["z", "--file", str(path), "--which", "psi"])
    assert result.exit_code == 0
    assert result.output.strip() == "t1 + t2 + t3"


def test_z_malformed_file_exits_2(runner, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("not a graph\n")
    result = runner.invoke(cli, ["z", "--file", str(path)])
    assert result.exit_code == 2


def test_z_requires_exactly_one_source(runner, tmp_path):
    result = runner.invoke(cli, ["z"])
    assert result.exit_code == 2
    path = tmp_path / "edges.txt"
    path.write_text("V 1\n1 0 0\n")
    result = runner.invoke(
        cli, ["z", "--file", str(path), "--family", "polygon", "--m", "1"]
    )
    assert result.exit_code == 2


def test_class_banana(runner):
    result = runner.invoke(cli, ["class", "--family", "banana", "--m", "3"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    # T^3 + (T-1)(T+1)^4 expanded
    assert doc["class_T"] == [-1, -3, -2, 3, 3, 1]
    assert doc["rendering"] == "T^5 + 3*T^4 + 3*T^3 - 2*T^2 - 3*T - 1"


def test_class_oracle_agreement(runner):
    result = runner.invoke(
        cli, ["class", "--family", "polygon", "--m", "2", "--oracle"]
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["oracle"]["match"] is True
    assert doc["class_T"] == [2, -2, -2, 2, 1]


def test_class_chain_requires_fixed_q(runner):
    result = runner.invoke(
        cli, ["class", "--family", "chain-polygon", "--m", "2", "--k", "1", "--N", "2"]
    )
    assert result.exit_code == 2
    result = runner.invoke(
        cli,
        [
            "class",
            "--family",
            "chain-polygon",
            "--m",
            "1",
            "--k",
            "1",
            "--N",
            "2",
            "--fixed-q",
        ],
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["class_T"] == [0, 1, 2, 3, 2, 1]


def test_cone_polygon(runner):
    result = runner.invoke(cli, ["cone", "--family", "polygon", "--m", "2"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["rendering"] == "T^4 + 2*T^3 - T"


def test_chi_csv_row(runner):
    result = runner.invoke(
        cli,
        ["chi", "--family", "chain-polygon", "--m", "2", "--k", "1", "--N", "1"],
    )
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "m,k,N,edges,class_at_T=-2,chi_c_locus,closed_form,agree"
    assert lines[1] == "2,1,1,3,-2,1,1,True"


def test_chi_grid_json(runner):
    result = runner.invoke(
        cli,
        [
            "chi",
            "--family",
            "chain-banana",
            "--m",
            "0..2",
            "--k",
            "0",
            "--N",
            "1..2",
            "--format",
            "json",
        ],
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert len(doc["rows"]) == 6
    assert all(row["agree"] for row in doc["rows"])


def test_count_report(runner):
    result = runner.invoke(
        cli,
        [
            "count",
            "--family",
            "polygon",
            "--m",
            "2",
            "--primes",
            "2,3,5,7,11",
            "--check",
            "13",
        ],
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["ambient_dim"] == 4
    assert doc["class_T"] == [2, -2, -2, 2, 1]
    assert doc["samples"][0] == [2, 1]
    assert doc["check"]["prime"] == 13
    assert doc["check"]["predicted"] == doc["check"]["observed"]


def test_count_fixed_q(runner):
    result = runner.invoke(
        cli, ["count", "--family", "polygon", "--m", "2", "--q", "2"]
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["ambient_dim"] == 3
    assert doc["class_T"] == [-2, 0, 2, 1]


def test_z_edge_budget_exit_3(runner, tmp_path):
    lines = ["V 2"] + [f"e{i} 0 1" for i in range(25)]
    path = tmp_path / "big.txt"
    path.write_text("\n".join(lines) + "\n")
    result = runner.invoke(cli, ["z", "--file", str(path)])
    assert result.exit_code == 3


def test_count_budget_exit_3(runner, monkeypatch):
    monkeypatch.setenv("POTTS_BUDGET", "100")
    result = runner.invoke(cli, ["count", "--family", "polygon", "--m", "2"])
    assert result.exit_code == 3


def test_oracle_mismatch_exit_4(runner, monkeypatch):
    import pottsmotive.cli as cli_mod

    monkeypatch.setattr(
        cli_mod.gr, "polygon_class", lambda m: cli_mod.gr.banana_class(m + 1)
    )
    result = runner.invoke(
        cli, ["class", "--family", "polygon", "--m", "2", "--oracle"]
    )
    assert result.exit_code == 4


def test_determinism(runner):
    args = ["chi", "--family", "chain-banana", "--m", "0..3", "--k", "0..2", "--N", "1..3"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.output == second.output
    args = ["count", "--family", "banana", "--m", "1"]
    assert runner.invoke(cli, args).output == runner.invoke(cli, args).output


def test_json_round_trip(runner):
    result = runner.invoke(cli, ["count", "--family", "banana", "--m", "2"])
    doc = json.loads(result.output)
    assert json.dumps(doc) == result.output.strip()


def test_verify_suite_green(runner):
    result = runner.invoke(cli, ["verify", "--suite", "classes", "--max-dim", "4"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["failed"] == 0
    assert doc["passed"] > 0


def test_verify_failure_exit_1(runner, monkeypatch):
    from pottsmotive import verify as verify_mod

    def broken_suite(max_dim=5):
        return [{"name": "forced/failure", "ok": False, "detail": "synthetic"}]

    monkeypatch.setitem(verify_mod.SUITES, "classes", broken_suite)
    result = runner.invoke(cli, ["verify", "--suite", "classes"])
    assert result.exit_code == 1
    doc = json.loads(result.output)
    assert doc["failed"] == 1
