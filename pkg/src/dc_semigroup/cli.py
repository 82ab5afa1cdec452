"""Command line interface for dc-semigroup."""

import logging
import re
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

import click
from rich.console import Console
from rich.logging import RichHandler

try:
    # Try absolute import first (works when package is installed)
    from dc_semigroup import __version__
    from dc_semigroup.algebra.closure import ClosureBuilder
    from dc_semigroup.algebra.constants import (
        DEFAULT_VERIFY_BASES,
        DEFAULT_VERIFY_BOUND,
        DEFAULT_VERIFY_MAX_EXP,
        EXIT_DOMAIN_ERROR,
        EXIT_MISMATCH,
        EXIT_NOT_MEMBER,
        EXIT_RESOURCE_ERROR,
        MIN_BASE,
    )
    from dc_semigroup.algebra.errors import (
        DcSemigroupError,
        ResourceLimitError,
    )
    from dc_semigroup.reporting.formatter import ReportFormatter
    from dc_semigroup.reporting.report import ClosureReport
    from dc_semigroup.verification.sweep import VerificationSweep
except ImportError:
    # Fall back to relative import (works in development/test environments)
    from . import __version__
    from .algebra.closure import ClosureBuilder
    from .algebra.constants import (
        DEFAULT_VERIFY_BASES,
        DEFAULT_VERIFY_BOUND,
        DEFAULT_VERIFY_MAX_EXP,
        EXIT_DOMAIN_ERROR,
        EXIT_MISMATCH,
        EXIT_NOT_MEMBER,
        EXIT_RESOURCE_ERROR,
        MIN_BASE,
    )
    from .algebra.errors import DcSemigroupError, ResourceLimitError
    from .reporting.formatter import ReportFormatter
    from .reporting.report import ClosureReport
    from .verification.sweep import VerificationSweep

NOTATION_HELP = (
    "Results are written as I_b(start,length), the integers with between "
    "start+1 and start+length base-b digits, i.e. [b^start, b^(start+length)). "
    "I_b(t,+inf) is [b^t, +inf) and N* is every positive integer."
)


class DecimalInteger(click.ParamType):
    """A non-negative integer written in decimal, of any size."""

    name = "integer"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> int:
        if isinstance(value, int):
            return value
        text = str(value).strip()
        if not re.fullmatch(r"\d+", text):
            self.fail(f"'{value}' is not a decimal integer", param, ctx)
        return int(text)


class BaseRange(click.ParamType):
    """An inclusive range of bases written LO..HI (or a single base)."""

    name = "lo..hi"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> range:
        if isinstance(value, range):
            return value
        match = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", str(value).strip())
        if match is None:
            self.fail(f"'{value}' is not a base range like 2..5", param, ctx)
        low = int(match.group(1))
        high = int(match.group(2) or low)
        if low < MIN_BASE or high < low:
            self.fail(f"'{value}' must satisfy {MIN_BASE} <= lo <= hi", param, ctx)
        return range(low, high + 1)


DECIMAL_INTEGER = DecimalInteger()
BASE_RANGE = BaseRange()

base_option = click.option(
    "--base",
    type=click.IntRange(min=MIN_BASE),
    default=10,
    show_default=True,
    help="Radix b whose digit counts define the digit classes",
)
json_option = click.option(
    "--json", "as_json", is_flag=True, help="Print the machine-readable report"
)
ascii_option = click.option(
    "--ascii",
    "ascii_only",
    is_flag=True,
    help="Use 'U' and '{}' instead of the union and empty-set symbols",
)


@click.group(epilog=NOTATION_HELP)
@click.version_option(version=__version__, package_name="dc-semigroup")
@click.option(
    "-v", "--verbose", count=True, help="Log progress (-v) or debug details (-vv)"
)
def main(verbose: int) -> None:
    """Smallest multiplicative semigroups closed under the number of digits."""
    _configure_logging(verbose)
    # Inputs and outputs may be integers of any size
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


@main.command(epilog=NOTATION_HELP)
@click.argument("elements", nargs=-1, required=True, type=DECIMAL_INTEGER)
@base_option
@json_option
@ascii_option
def closure(
    elements: tuple[int, ...], base: int, as_json: bool, ascii_only: bool
) -> None:
    """Compute the smallest b-dc-semigroup containing ELEMENTS."""
    with _reporting_errors():
        report = _build_report(list(elements), base)
    ReportFormatter(ascii_only).display_closure(report, as_json)


@main.command(epilog=NOTATION_HELP)
@click.argument("query", type=DECIMAL_INTEGER)
@click.argument("elements", nargs=-1, required=True, type=DECIMAL_INTEGER)
@base_option
@json_option
def member(query: int, elements: tuple[int, ...], base: int, as_json: bool) -> None:
    """Test whether QUERY lies in the closure of ELEMENTS.

    Exits with 0 for a member, 1 for a non-member and 2 or more on errors.
    """
    with _reporting_errors():
        report = _build_report(list(elements), base)
        is_member = report.semigroup().member(query)
    ReportFormatter().display_membership(report, query, is_member, as_json)
    if not is_member:
        raise click.exceptions.Exit(EXIT_NOT_MEMBER)


@main.command()
@click.argument("numbers", nargs=-1, required=True, type=DECIMAL_INTEGER)
@base_option
def digits(numbers: tuple[int, ...], base: int) -> None:
    """Show the exponent and digit class of each of NUMBERS."""
    formatter = ReportFormatter()
    with _reporting_errors():
        for x in numbers:
            formatter.display_digit_class(x, base)


@main.command()
@click.option(
    "--bases",
    type=BASE_RANGE,
    default=f"{DEFAULT_VERIFY_BASES[0]}..{DEFAULT_VERIFY_BASES[1]}",
    show_default=True,
    help="Inclusive range of bases to sweep",
)
@click.option(
    "--max-exp",
    type=click.IntRange(min=0),
    default=DEFAULT_VERIFY_MAX_EXP,
    show_default=True,
    help="Sweep every non-empty exponent set within {0, ..., max-exp}",
)
@click.option(
    "--bound",
    type=click.IntRange(min=1),
    default=DEFAULT_VERIFY_BOUND,
    show_default=True,
    help="Compare exponents below this bound",
)
@click.option(
    "--integer-check",
    is_flag=True,
    help="Also cross-check against the integer-level closure (bases 2 and 3)",
)
@click.option(
    "--output-format",
    type=click.Choice(["text", "table", "json", "csv"]),
    default="text",
    help="Output format for the sweep summary",
)
def verify(
    bases: range,
    max_exp: int,
    bound: int,
    integer_check: bool,
    output_format: str,
) -> None:
    """Check the construction against brute-force closures."""
    if bound <= max_exp:
        raise click.BadParameter(
            f"must exceed --max-exp ({max_exp})", param_hint="'--bound'"
        )

    with _reporting_errors():
        result = VerificationSweep(bases, max_exp, bound, integer_check).run()
    ReportFormatter().display_sweep(result, output_format)
    if not result.passed:
        raise click.exceptions.Exit(EXIT_MISMATCH)


def _build_report(elements: list[int], base: int) -> ClosureReport:
    """Run the construction and wrap it in a report."""
    outcome = ClosureBuilder.build(elements, base)
    return ClosureReport.from_outcome(outcome, elements)


@contextmanager
def _reporting_errors() -> Iterator[None]:
    """Turn library errors into an error message and a non-zero exit code."""
    try:
        yield
    except ResourceLimitError as e:
        click.echo(f"Error: {e}", err=True)
        raise click.exceptions.Exit(EXIT_RESOURCE_ERROR) from e
    except DcSemigroupError as e:
        click.echo(f"Error: {e}", err=True)
        raise click.exceptions.Exit(EXIT_DOMAIN_ERROR) from e


def _configure_logging(verbose: int) -> None:
    """Send log records to stderr through rich."""
    levels = {0: logging.WARNING, 1: logging.INFO}
    logging.basicConfig(
        level=levels.get(verbose, logging.DEBUG),
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


if __name__ == "__main__":
    main()
