"""Unit tests for CLI module."""

import argparse
import json
from pathlib import Path

import pytest

from deformed_laplacian.cli import (
    EXIT_INVARIANT,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    _exit_code_for,
    cmd_bounds,
    cmd_gen,
    cmd_hjoin,
    cmd_spectrum,
    cmd_sweep,
    cmd_tree,
    cmd_verify,
    create_parser,
    file_info,
    main,
)
from deformed_laplacian.domain.errors import (
    ConsistencyError,
    EdgeListParseError,
    ParameterError,
    StructureError,
)


def parse(*argv: str) -> argparse.Namespace:
    """Parse a command line with the real parser."""
    return create_parser().parse_args(list(argv))


def test_file_info() -> None:
    """Test file_info function returns expected metadata."""
    info = file_info()
    assert info["name"] == "cli"
    assert info["version"] == "0.1.0"
    assert info["author"] == "John Ayers"


def test_parser_creation() -> None:
    """Test parser creation."""
    parser = create_parser()
    assert parser.prog == "deformed-laplacian"


def test_parser_version() -> None:
    """Test version flag."""
    parser = create_parser()

    with pytest.raises(SystemExit) as exc_info:
        parser.parse_args(["--version"])

    assert exc_info.value.code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "g.txt"],
        ["bogus"],
        ["tree", "walk", "g.txt", "--s", "1"],
        ["sweep", "g.txt", "--from", "0", "--to", "1", "--steps", "many"],
    ],
)
def test_parser_usage_errors_exit_with_usage_code(
    argv: list[str], capsys: pytest.CaptureFixture[str]
) -> None:
    """Test that argument errors exit with 1, not argparse's 2."""
    with pytest.raises(SystemExit) as exc_info:
        create_parser().parse_args(argv)

    assert exc_info.value.code == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_main_without_required_option(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test the console entry point for a missing --s."""
    monkeypatch.setattr("sys.argv", ["deformed-laplacian", "spectrum", "g.txt"])

    with pytest.raises(SystemExit) as exc_info:
        main()

    assert exc_info.value.code == EXIT_USAGE


def test_parser_tree_command() -> None:
    """Test tree command parsing."""
    args = parse("tree", "locate", "g.txt", "--s", "0.5", "--lambda", "1.5", "--root", "2")

    assert args.command == "tree"
    assert args.action == "locate"
    assert args.lam == 1.5
    assert args.root == 2
    assert args.format == "text"


def test_parser_verbose_before_and_after_command() -> None:
    """Test that -v works on either side of the subcommand."""
    assert parse("-v", "spectrum", "g.txt", "--s", "1").verbose is True
    assert parse("spectrum", "g.txt", "--s", "1", "-v").verbose is True
    assert parse("spectrum", "g.txt", "--s", "1").verbose is False


def test_parser_sweep_command() -> None:
    """Test sweep command parsing."""
    args = parse("sweep", "g.txt", "--from", "-1", "--to", "1", "--steps", "5", "--workers", "2")

    assert (args.s_from, args.s_to, args.steps, args.workers) == (-1.0, 1.0, 5, 2)


@pytest.mark.parametrize(
    ("error", "code"),
    [
        (EdgeListParseError(3, "bad line"), EXIT_IO),
        (FileNotFoundError("missing"), EXIT_IO),
        (ConsistencyError("mismatch"), EXIT_INVARIANT),
        (ParameterError("bad s"), EXIT_USAGE),
        (StructureError("not a tree"), EXIT_USAGE),
    ],
)
def test_exit_code_for(error: Exception, code: int) -> None:
    """Test exception to exit code mapping."""
    assert _exit_code_for(error) == code


def test_cmd_gen_prints_edge_list(capsys: pytest.CaptureFixture[str]) -> None:
    """Test generating a path."""
    assert cmd_gen(parse("gen", "path", "4")) == EXIT_OK

    assert capsys.readouterr().out.splitlines()[0] == "4 3"


def test_cmd_gen_writes_file(tmp_path: Path) -> None:
    """Test generating into a file."""
    out = tmp_path / "star.txt"

    assert cmd_gen(parse("gen", "star", "3", "--out", str(out))) == EXIT_OK
    assert out.read_text().splitlines()[0] == "4 3"


def test_cmd_gen_unknown_family() -> None:
    """Test that an unknown family is a usage error."""
    assert cmd_gen(parse("gen", "hypercube", "3")) == EXIT_USAGE


def test_cmd_spectrum_text(wheel_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test the text spectrum of the five-vertex example."""
    assert cmd_spectrum(parse("spectrum", str(wheel_file), "--s", "0.75")) == EXIT_OK

    assert "3.625" in capsys.readouterr().out


def test_cmd_spectrum_json(wheel_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test JSON output stays parseable."""
    args = parse("spectrum", str(wheel_file), "--s", "0.75", "--format", "json")

    assert cmd_spectrum(args) == EXIT_OK

    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 5
    assert len(data["eigenvalues"]) == 5
    assert data["lambda_max"] == pytest.approx(3.625, abs=1e-6)


def test_cmd_spectrum_csv(wheel_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test CSV output with a single row."""
    args = parse("spectrum", str(wheel_file), "--s", "0.75", "--format", "csv")

    assert cmd_spectrum(args) == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "s,lambda_1,lambda_2,lambda_3,lambda_4,lambda_5"
    assert lines[1].startswith("0.75,")


def test_cmd_spectrum_missing_file(tmp_path: Path) -> None:
    """Test that a missing graph file is an I/O error."""
    assert cmd_spectrum(parse("spectrum", str(tmp_path / "nope.txt"), "--s", "1")) == EXIT_IO


def test_cmd_spectrum_malformed_file(tmp_path: Path) -> None:
    """Test that a malformed graph file is an I/O error."""
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 x\n")

    assert cmd_spectrum(parse("spectrum", str(bad), "--s", "1")) == EXIT_IO


def test_cmd_bounds(wheel_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test bounds output in text and JSON."""
    assert cmd_bounds(parse("bounds", str(wheel_file), "--s", "0.75")) == EXIT_OK
    assert "upper bound:" in capsys.readouterr().out

    args = parse("bounds", str(wheel_file), "--s", "1.5", "--format", "json")
    assert cmd_bounds(args) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert "eigenvalues" not in data
    assert data["lower_bound"] <= data["lambda_max"] <= data["upper_bound"]


def test_cmd_tree_actions(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test locate, radius, kth and props on a path and a star."""
    path_file = tmp_path / "path4.txt"
    star_file = tmp_path / "star3.txt"
    cmd_gen(parse("gen", "path", "4", "--out", str(path_file)))
    cmd_gen(parse("gen", "star", "3", "--out", str(star_file)))
    capsys.readouterr()

    assert cmd_tree(parse("tree", "locate", str(path_file), "--s", "1", "--lambda", "0")) == 0
    assert "greater=3 equal=1 less=0" in capsys.readouterr().out

    args = parse("tree", "radius", str(path_file), "--s", "1", "--format", "json")
    assert cmd_tree(args) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["lambda_max"] == pytest.approx(2 + 2**0.5)

    args = parse("tree", "kth", str(path_file), "--s", "1", "--k", "1", "--format", "json")
    assert cmd_tree(args) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["value"] == pytest.approx(0.0, abs=1e-8)

    args = parse("tree", "props", str(star_file), "--s", "1", "--format", "json")
    assert cmd_tree(args) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["passed"] is True


def test_cmd_tree_missing_arguments(tmp_path: Path) -> None:
    """Test that locate and kth need their parameters."""
    path_file = tmp_path / "path3.txt"
    cmd_gen(parse("gen", "path", "3", "--out", str(path_file)))

    assert cmd_tree(parse("tree", "locate", str(path_file), "--s", "1")) == EXIT_USAGE
    assert cmd_tree(parse("tree", "kth", str(path_file), "--s", "1")) == EXIT_USAGE


def test_cmd_tree_rejects_non_tree(wheel_file: Path) -> None:
    """Test that a graph with cycles is a usage error."""
    assert cmd_tree(parse("tree", "radius", str(wheel_file), "--s", "1")) == EXIT_USAGE


def test_cmd_hjoin_verify(p3_join_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test the H-join spectrum against the dense oracle."""
    args = parse("hjoin", str(p3_join_file), "--s", "1", "--verify", "--format", "json")

    assert cmd_hjoin(args) == EXIT_OK

    data = json.loads(capsys.readouterr().out)
    assert sum(data["eigenvalues"]) == pytest.approx(62.0)
    assert data["closed_form"] == "p3-symmetric"


def test_cmd_hjoin_malformed_spec(tmp_path: Path) -> None:
    """Test that malformed JSON is an I/O error."""
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")

    assert cmd_hjoin(parse("hjoin", str(bad), "--s", "1")) == EXIT_IO


def test_cmd_sweep_graph_to_file(wheel_file: Path, tmp_path: Path) -> None:
    """Test writing a sweep CSV."""
    out = tmp_path / "sweep.csv"
    args = parse(
        "sweep", str(wheel_file), "--from", "-1", "--to", "1", "--steps", "3", "--out", str(out)
    )

    assert cmd_sweep(args) == EXIT_OK

    lines = out.read_text().splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("s,lambda_1")


def test_cmd_sweep_hjoin_json(p3_join_file: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test that .json inputs are swept as H-joins."""
    args = parse(
        "sweep", str(p3_join_file), "--from", "0", "--to", "1", "--steps", "2", "--format", "json"
    )

    assert cmd_sweep(args) == EXIT_OK

    rows = json.loads(capsys.readouterr().out)["rows"]
    assert len(rows) == 2
    assert len(rows[0]["eigenvalues"]) == 12


def test_cmd_sweep_bad_range(wheel_file: Path) -> None:
    """Test that an empty range is a usage error."""
    args = parse("sweep", str(wheel_file), "--from", "1", "--to", "0", "--steps", "3")

    assert cmd_sweep(args) == EXIT_USAGE


def test_cmd_verify_graph(
    wheel_file: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Test verifying a graph file and saving the report."""
    report_path = tmp_path / "report.json"

    assert cmd_verify(parse("verify", str(wheel_file), "--out", str(report_path))) == EXIT_OK

    assert "RESULT: PASS" in capsys.readouterr().out
    assert json.loads(report_path.read_text())["source"] == "wheel.txt"


def test_cmd_verify_requires_input() -> None:
    """Test that verify needs a file or --random."""
    assert cmd_verify(parse("verify")) == EXIT_USAGE
