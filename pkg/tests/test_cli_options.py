"""Tests for CLI options and error handling."""

import pytest
from click.testing import CliRunner

from dc_semigroup.cli import main


class TestCLIOptions:
    """Test class for CLI options and exit codes."""

    @pytest.fixture
    def runner(self) -> CliRunner:
        """Create a CLI runner."""
        return CliRunner()

    def test_ascii_union(self, runner: CliRunner) -> None:
        """Test the ASCII rendering of a union."""
        result = runner.invoke(main, ["closure", "--ascii", "1235", "54321"])
        assert result.exit_code == 0
        assert result.output.strip() == "I_10(3,2) U I_10(6,+inf)"

    def test_base_option(self, runner: CliRunner) -> None:
        """Test that the base changes the digit classes."""
        result = runner.invoke(main, ["closure", "--base", "3", "27", "81"])
        assert result.exit_code == 0
        assert result.output.strip() == "I_3(3,2) ∪ I_3(6,+inf)"

    @pytest.mark.parametrize("base", ["1", "0", "ten"])
    def test_invalid_base(self, runner: CliRunner, base: str) -> None:
        """Test that bases below 2 are usage errors."""
        result = runner.invoke(main, ["closure", "--base", base, "5"])
        assert result.exit_code == 2

    @pytest.mark.parametrize("value", ["12a", "-5", "1.5", ""])
    def test_malformed_integer(self, runner: CliRunner, value: str) -> None:
        """Test that non-decimal input is a usage error."""
        result = runner.invoke(main, ["closure", "--", value])
        assert result.exit_code == 2

    def test_zero_is_a_domain_error(self, runner: CliRunner) -> None:
        """Test that 0 exits with the domain error code."""
        result = runner.invoke(main, ["member", "0", "1235"])
        assert result.exit_code == 3
        assert "Error" in result.output

    def test_zero_generator(self, runner: CliRunner) -> None:
        """Test that 0 as a generator exits with the domain error code."""
        result = runner.invoke(main, ["closure", "0", "5"])
        assert result.exit_code == 3

    def test_missing_elements(self, runner: CliRunner) -> None:
        """Test that at least one element is required."""
        result = runner.invoke(main, ["closure"])
        assert result.exit_code == 2

    def test_resource_limit(self, runner: CliRunner) -> None:
        """Test that an oversized enumeration exits with code 4."""
        result = runner.invoke(main, ["closure", "1" + "0" * 20000])
        assert result.exit_code == 4
        assert "Error" in result.output

    def test_verify_bound_zero(self, runner: CliRunner) -> None:
        """Test that a zero bound is a usage error."""
        result = runner.invoke(main, ["verify", "--bound", "0"])
        assert result.exit_code == 2

    def test_verify_bound_below_max_exp(self, runner: CliRunner) -> None:
        """Test that the bound must exceed --max-exp."""
        result = runner.invoke(main, ["verify", "--max-exp", "6", "--bound", "5"])
        assert result.exit_code == 2
        assert "--bound" in result.output

    @pytest.mark.parametrize("bases", ["1..3", "5..2", "two"])
    def test_verify_invalid_bases(self, runner: CliRunner, bases: str) -> None:
        """Test that malformed base ranges are usage errors."""
        result = runner.invoke(main, ["verify", "--bases", bases])
        assert result.exit_code == 2

    def test_integer_check_large_bound(self, runner: CliRunner) -> None:
        """Test that the integer cross-check refuses large bounds."""
        result = runner.invoke(main, ["verify", "--bases", "2", "--integer-check"])
        assert result.exit_code == 4

    @pytest.mark.parametrize(
        "args", [["--max-exp", "30", "--bound", "60"], ["--bound", "100000"]]
    )
    def test_verify_size_limits(self, runner: CliRunner, args: list[str]) -> None:
        """Test that oversized sweeps exit with code 4 instead of running."""
        result = runner.invoke(main, ["verify", "--bases", "2", *args])
        assert result.exit_code == 4
        assert "sweep limit" in result.output

    def test_integer_check_without_small_bases(self, runner: CliRunner) -> None:
        """Test that the cross-check bound limit ignores bases above 3."""
        result = runner.invoke(
            main, ["verify", "--bases", "4..5", "--max-exp", "2", "--integer-check"]
        )
        assert result.exit_code == 0
        assert "14 cases, 0 mismatches" in result.output
