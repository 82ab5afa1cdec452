"""Tests for CLI output format functionality."""

import json

import pytest
from click.testing import CliRunner

from dc_semigroup.cli import main
from dc_semigroup.reporting.formatter import ReportFormatter
from dc_semigroup.reporting.report import ClosureReport


class TestCLIOutputFormats:
    """Test class for JSON, CSV and table output."""

    @pytest.fixture
    def runner(self) -> CliRunner:
        """Create a CLI runner."""
        return CliRunner()

    def test_closure_json(self, runner: CliRunner) -> None:
        """Test the fields of the closure report."""
        result = runner.invoke(main, ["closure", "--json", "1235", "54321"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert list(data) == [
            "base",
            "elements",
            "exponents",
            "runs",
            "tail",
            "case",
            "d",
            "t",
        ]
        assert data["base"] == 10
        assert data["elements"] == ["1235", "54321"]
        assert data["exponents"] == [3, 4]
        assert data["runs"] == [{"start": 3, "len": 2}]
        assert data["tail"] == 6
        assert data["case"] == "1"
        assert (data["d"], data["t"]) == (2, 6)

    def test_closure_json_round_trip(self, runner: CliRunner) -> None:
        """Test that parsing and re-serializing gives identical bytes."""
        for args in (["1235", "54321"], ["--base", "2", "1", "8"], ["7"]):
            result = runner.invoke(main, ["closure", "--json", *args])
            assert result.exit_code == 0
            text = result.output.rstrip("\n")
            assert ClosureReport.from_json(text).to_json() == text

    def test_closure_json_binary_unit(self, runner: CliRunner) -> None:
        """Test the report of {1} in base 2."""
        result = runner.invoke(main, ["closure", "--json", "--base", "2", "1"])
        data = json.loads(result.output)
        assert data["runs"] == [{"start": 0, "len": 1}]
        assert data["tail"] is None
        assert data["case"] == "2"

    def test_member_json(self, runner: CliRunner) -> None:
        """Test the membership report."""
        result = runner.invoke(main, ["member", "--json", "123456", "1235", "54321"])
        assert result.exit_code == 1
        data = json.loads(result.output)
        assert data["query"] == "123456"
        assert data["member"] is False
        assert data["closure"]["tail"] == 6

    def test_verify_text(self, runner: CliRunner) -> None:
        """Test the default sweep summary."""
        result = runner.invoke(main, ["verify"])
        assert result.exit_code == 0
        assert "508 cases, 0 mismatches" in result.output

    def test_verify_integer_check(self, runner: CliRunner) -> None:
        """Test the sweep with the integer cross-check."""
        result = runner.invoke(
            main, ["verify", "--bases", "3", "--integer-check", "--bound", "10"]
        )
        assert result.exit_code == 0
        assert "127 cases, 0 mismatches" in result.output
        assert "175 integer cross-checks, 0 mismatches" in result.output

    def test_verify_json(self, runner: CliRunner) -> None:
        """Test the sweep summary as JSON."""
        result = runner.invoke(
            main, ["verify", "--bases", "2..3", "--output-format", "json"]
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["cases"] == 254
        assert data["mismatches"] == 0
        assert data["per_base"] == [
            {"base": 2, "cases": 127, "mismatches": 0},
            {"base": 3, "cases": 127, "mismatches": 0},
        ]
        assert data["failures"] == []

    def test_verify_csv(self, runner: CliRunner) -> None:
        """Test the sweep summary as CSV."""
        result = runner.invoke(
            main, ["verify", "--bases", "2..3", "--output-format", "csv"]
        )
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines == ["base,cases,mismatches", "2,127,0", "3,127,0"]

    def test_verify_table(self, runner: CliRunner) -> None:
        """Test the sweep summary as a table."""
        result = runner.invoke(
            main, ["verify", "--bases", "4", "--output-format", "table"]
        )
        assert result.exit_code == 0
        assert "Total" in result.output
        assert "127 cases, 0 mismatches" in result.output


class TestReportFormatter:
    """Test class for semigroup rendering."""

    def test_render_empty(self) -> None:
        """Test the empty semigroup in both symbol sets."""
        semigroup = ClosureReport(10, (), (), (), None, "empty").semigroup()
        assert ReportFormatter().render_semigroup(semigroup) == "∅"
        assert ReportFormatter(ascii_only=True).render_semigroup(semigroup) == "{}"

    def test_report_from_dict(self) -> None:
        """Test reading a report written by hand."""
        report = ClosureReport.from_dict(
            {
                "base": 10,
                "elements": ["100"],
                "exponents": [2],
                "runs": [{"start": 2, "len": 1}],
                "tail": 4,
                "case": "1",
                "d": 2,
                "t": 4,
            }
        )
        rendered = ReportFormatter().render_semigroup(report.semigroup())
        assert rendered == "I_10(2,1) ∪ I_10(4,+inf)"
