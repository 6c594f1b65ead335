"""Command-line surface: golden outputs, JSON schema, exit codes."""

import json

import pytest

import symgraphs.cli as cli
from symgraphs.series import ConsistencyError, SymSeries


def run_cli(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:  # argparse errors
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out


# --- series ---------------------------------------------------------------------


def test_series_matching_golden(capsys):
    code, out = run_cli(
        ["series", "--edge-weights", "2,3", "--degrees", "2", "--n-max", "8"], capsys
    )
    assert code == 0
    assert out.strip() == "1,0,1,0,3,0,15,0,105"


def test_series_two_degree_golden(capsys):
    code, out = run_cli(
        ["series", "--edge-weights", "2,3", "--degrees", "2,3", "--n-max", "8"],
        capsys,
    )
    assert code == 0
    assert out.strip() == "1,0,2,0,7,0,36,0,249"


def test_series_json_schema(capsys):
    code, out = run_cli(
        [
            "series",
            "--edge-weights",
            "1",
            "--degrees",
            "2",
            "--n-max",
            "3",
            "--format",
            "json",
        ],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["J"] == [1]
    assert payload["K"] == [2]
    assert payload["loops"] is False
    assert payload["counts"] == [
        {"n": 0, "count": "1"},
        {"n": 1, "count": "0"},
        {"n": 2, "count": "0"},
        {"n": 3, "count": "1"},
    ]
    assert all(isinstance(entry["count"], str) for entry in payload["counts"])


def test_series_text_and_json_agree(capsys):
    base = ["series", "--edge-weights", "2,3", "--degrees", "2", "--n-max", "6"]
    _, text_out = run_cli(base, capsys)
    _, json_out = run_cli(base + ["--format", "json"], capsys)
    text_counts = [int(x) for x in text_out.strip().split(",")]
    json_counts = [int(e["count"]) for e in json.loads(json_out)["counts"]]
    assert text_counts == json_counts


def test_series_loops_flag_changes_counts(capsys):
    base = ["series", "--edge-weights", "1", "--degrees", "2", "--n-max", "3"]
    _, plain = run_cli(base, capsys)
    code, looped = run_cli(base + ["--loops"], capsys)
    assert code == 0
    # with loops a single vertex can carry degree 2; at n=3 the triangle
    # and the three-loops configuration are the only degree-2 graphs
    assert plain.strip() == "1,0,0,1"
    assert looped.strip() == "1,1,1,2"


# --- expand ---------------------------------------------------------------------


def test_expand_single_edge_golden(capsys):
    code, out = run_cli(["expand", "--edge-weights", "1", "--max-degree", "2"], capsys)
    assert code == 0
    assert out.strip() == "m[1,1]"


def test_expand_degree_six_golden(capsys):
    code, out = run_cli(
        ["expand", "--edge-weights", "2,3", "--max-degree", "6"], capsys
    )
    assert code == 0
    assert out.strip() == "m[2,2] + m[3,3]"


def test_expand_degree_eight_terms(capsys):
    code, out = run_cli(
        ["expand", "--edge-weights", "2,3", "--max-degree", "8"], capsys
    )
    assert code == 0
    rendered = out.strip()
    for term in ["m[2,2]", "m[3,3]", "m[4,2,2]", "3 m[2,2,2,2]"]:
        assert term in rendered
    assert rendered.count("+") == 3


def test_expand_f_only_degree_six_terms(capsys):
    code, out = run_cli(
        ["expand", "--f-only", "--edge-weights", "2,3", "--max-degree", "6"], capsys
    )
    assert code == 0
    rendered = out.strip()
    for term in ["m[2]", "m[3]", "m[2,2]", "m[3,2]", "m[2,2,2]", "m[3,3]"]:
        assert term in rendered.split(" + ")


def test_expand_json_round_trips_to_series(capsys):
    code, out = run_cli(
        [
            "expand",
            "--edge-weights",
            "2,3",
            "--max-degree",
            "8",
            "--format",
            "json",
        ],
        capsys,
    )
    assert code == 0
    series = SymSeries.from_json_dict(json.loads(out))
    assert series.coefficient((2, 2, 2, 2)) == 3
    assert series.coefficient((4, 2, 2)) == 1


# --- count ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "degree_seq, expected",
    [("2,2,2,2", "3"), ("6,3,3", "1"), ("5,3,2", "1")],
)
def test_count_goldens(degree_seq, expected, capsys):
    code, out = run_cli(
        ["count", "--edge-weights", "2,3", "--degree-seq", degree_seq], capsys
    )
    assert code == 0
    assert out.strip() == expected


def test_count_parity_zero(capsys):
    code, out = run_cli(
        ["count", "--edge-weights", "1", "--degree-seq", "1,1,1"], capsys
    )
    assert code == 0
    assert out.strip() == "0"


# --- verify ---------------------------------------------------------------------


def test_verify_default_grid_agrees(capsys):
    code, out = run_cli(["verify"], capsys)
    assert code == 0
    assert "all 105 cases agree" in out


def test_verify_injected_fault_exits_four(capsys):
    code, out = run_cli(["verify", "--inject-fault"], capsys)
    assert code == 4
    assert "MISMATCH" in out


def test_verify_loops_probe(capsys):
    code, out = run_cli(["verify", "--loops-probe"], capsys)
    assert code == 0
    assert "diag=J|{0}: matches the loop-weighted series" in out


# --- exit codes and argument validation --------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["series", "--edge-weights", "0", "--degrees", "2", "--n-max", "2"],
        ["series", "--edge-weights", "", "--degrees", "2", "--n-max", "2"],
        ["series", "--edge-weights", "2,x", "--degrees", "2", "--n-max", "2"],
        ["series", "--edge-weights", "2", "--degrees", "", "--n-max", "2"],
        ["count", "--edge-weights", "2", "--degree-seq", "2,0"],
        ["series", "--degrees", "2", "--n-max", "2"],
        ["bogus-subcommand"],
        [],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    code, _ = run_cli(argv, capsys)
    assert code == 2


def test_oracle_bound_needs_acknowledgement(capsys):
    argv = ["verify", "--oracle-bound", "7"]
    code, _ = run_cli(argv, capsys)
    assert code == 2
    code, out = run_cli(argv + ["--i-know-this-is-slow", "--n-max", "2"], capsys)
    assert code == 0


def test_consistency_error_exits_three(capsys, monkeypatch):
    def explode(*args, **kwargs):
        raise ConsistencyError("fractional count")

    monkeypatch.setattr(cli, "count_table", explode)
    code, _ = run_cli(
        ["series", "--edge-weights", "2", "--degrees", "2", "--n-max", "2"], capsys
    )
    assert code == 3


def test_edge_weights_up_to_shorthand(capsys):
    _, explicit = run_cli(
        ["series", "--edge-weights", "1,2,3", "--degrees", "2", "--n-max", "4"],
        capsys,
    )
    code, shorthand = run_cli(
        ["series", "--edge-weights-up-to", "3", "--degrees", "2", "--n-max", "4"],
        capsys,
    )
    assert code == 0
    assert shorthand == explicit
