"""CLI client: flag surface, exit codes, CSV output."""

import csv
import io

import pytest

from sizedcore.cli import (
    EXIT_BUDGET,
    EXIT_CONFIG,
    EXIT_OK,
    EXIT_PARSE,
    build_parser,
    main,
)

K5_TEXT = "\n".join(f"{i} {j}" for i in range(1, 6) for j in range(i + 1, 6))


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.txt"
    path.write_text(K5_TEXT + "\n")
    return str(path)


def test_required_flags_enforced(capsys):
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
    capsys.readouterr()


def test_t_and_frac_mutually_exclusive(k5_file, capsys):
    with pytest.raises(SystemExit):
        build_parser().parse_args(
            ["--input", k5_file, "--algo", "td", "--t", "3", "--t-frac", "0.5"]
        )
    capsys.readouterr()


def test_run_writes_csv_stdout(k5_file, capsys):
    code = main(["--input", k5_file, "--algo", "oracle", "--t", "3", "--reps", "1"])
    out, err = capsys.readouterr()
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "dataset"
    assert len(rows) == 3
    assert "mean_core=2.000" in err


def test_run_writes_csv_file(k5_file, tmp_path, capsys):
    out_path = tmp_path / "res.csv"
    code = main(
        [
            "--input", k5_file,
            "--algo", "td",
            "--t-frac", "0.6",
            "--reps", "2",
            "--seed", "4",
            "--out", str(out_path),
        ]
    )
    capsys.readouterr()
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out_path.read_text())))
    data = rows[1:-1]
    assert [r[6] for r in data] == ["4", "5"]
    assert all(r[4] == "3" for r in data)


def test_identical_config_identical_rows(k5_file, capsys):
    args = ["--input", k5_file, "--algo", "critical", "--t", "3", "--reps", "3"]
    main(args)
    first, _ = capsys.readouterr()
    main(args)
    second, _ = capsys.readouterr()
    keep = lambda text: [
        r[:10] for r in csv.reader(io.StringIO(text))
    ]  # drop elapsed/decomp timing columns
    assert keep(first) == keep(second)


def test_missing_input_exit_code(capsys):
    code = main(["--input", "/no/such/file", "--algo", "td", "--t", "3"])
    capsys.readouterr()
    assert code == EXIT_CONFIG


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\nbroken\n")
    code = main(["--input", str(bad), "--algo", "td", "--t", "2"])
    _, err = capsys.readouterr()
    assert code == EXIT_PARSE
    assert "line 2" in err


def test_bad_t_exit_code(k5_file, capsys):
    code = main(["--input", k5_file, "--algo", "td", "--t", "50"])
    capsys.readouterr()
    assert code == EXIT_CONFIG


def test_budget_exit_code(tmp_path, capsys):
    edges = "\n".join(f"{i} {j}" for i in range(30) for j in range(i + 1, 30))
    big = tmp_path / "k30.txt"
    big.write_text(edges + "\n")
    code = main(["--input", str(big), "--algo", "oracle", "--t", "15", "--reps", "1"])
    capsys.readouterr()
    assert code == EXIT_BUDGET


def test_strategy_flags_accepted(k5_file, capsys):
    code = main(
        [
            "--input", k5_file,
            "--algo", "bu",
            "--t", "3",
            "--reps", "1",
            "--restarts", "3",
            "--bu-growth", "random",
            "--td-order", "lowdeg",
        ]
    )
    capsys.readouterr()
    assert code == EXIT_OK
