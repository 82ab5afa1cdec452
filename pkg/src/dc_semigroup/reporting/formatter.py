"""Text, JSON, CSV and table rendering of closures and sweeps."""

import json

import click
from rich.console import Console
from rich.table import Table

from ..algebra.digits import RadixDigits
from ..algebra.semigroup import DcSemigroup
from ..verification.sweep import SweepResult
from .report import ClosureReport

UNION = {False: " \u222a ", True: " U "}
EMPTY_SET = {False: "\u2205", True: "{}"}
ALL_POSITIVE = "N*"


class ReportFormatter:
    """Handles rendering of closure reports and verification sweeps."""

    def __init__(self, ascii_only: bool = False) -> None:
        """Initialize the formatter."""
        self.ascii_only = ascii_only
        self.console = Console()

    def render_semigroup(self, semigroup: DcSemigroup) -> str:
        """Write a semigroup in I_b(start,length) notation."""
        if semigroup.is_empty():
            return EMPTY_SET[self.ascii_only]
        if semigroup.is_all_positive_integers():
            return ALL_POSITIVE

        b = semigroup.base
        parts = [f"I_{b}({run.start},{run.length})" for run in semigroup.runs]
        if semigroup.tail is not None:
            parts.append(f"I_{b}({semigroup.tail},+inf)")
        return UNION[self.ascii_only].join(parts)

    def display_closure(self, report: ClosureReport, as_json: bool = False) -> None:
        if as_json:
            click.echo(report.to_json())
        else:
            click.echo(self.render_semigroup(report.semigroup()))

    def display_membership(
        self, report: ClosureReport, query: int, member: bool, as_json: bool = False
    ) -> None:
        if not as_json:
            click.echo("yes" if member else "no")
            return
        output = {"query": str(query), "member": member, "closure": report.to_dict()}
        click.echo(json.dumps(output, ensure_ascii=False, indent=2))

    def display_digit_class(self, x: int, b: int) -> None:
        """Print the base-b form, exponent and digit class of x."""
        e = RadixDigits.digit_length(x, b)
        digit_class = RadixDigits.digit_class(e, b)
        low, high = digit_class[0], digit_class[-1]
        click.echo(
            f"{x} = {self._radix(x, b)}: exponent {e}, "
            f"class I_{b}({e},1) = [{self._radix(low, b)}, {self._radix(high, b)}]"
        )

    def display_sweep(self, result: SweepResult, output_format: str = "text") -> None:
        """Display a sweep summary in the requested format."""
        if output_format == "json":
            self._print_sweep_json(result)
            return
        if output_format == "csv":
            click.echo(result.summary().to_csv(index=False), nl=False)
            return
        if output_format == "table":
            self.console.print(self._create_sweep_table(result))

        click.echo(f"{result.case_count} cases, {result.mismatch_count} mismatches")
        if result.cross_check_count:
            click.echo(
                f"{result.cross_check_count} integer cross-checks, "
                f"{result.cross_check_mismatch_count} mismatches"
            )
        for row in result.mismatches():
            generators = row.get("exponents", row.get("elements"))
            click.echo(
                f"  mismatch: base {row['base']}, {generators}, "
                f"differing exponents {row['difference']}"
            )

    def _radix(self, x: int, b: int) -> str:
        if b == 10:  # noqa: PLR2004
            return str(x)
        return f"({RadixDigits.digit_string(x, b)})_{b}"

    def _print_sweep_json(self, result: SweepResult) -> None:
        output = {
            "cases": result.case_count,
            "mismatches": result.mismatch_count,
            "cross_checks": result.cross_check_count,
            "cross_check_mismatches": result.cross_check_mismatch_count,
            "per_base": json.loads(result.summary().to_json(orient="records")),
            "failures": [
                {key: str(value) for key, value in row.items()}
                for row in result.mismatches()
            ],
        }
        click.echo(json.dumps(output, ensure_ascii=False, indent=2))

    def _create_sweep_table(self, result: SweepResult) -> Table:
        table = Table(title="Construction vs index closure")
        table.add_column("Base", style="cyan", justify="right")
        table.add_column("Cases", style="green", justify="right")
        table.add_column("Mismatches", style="magenta", justify="right")

        summary = result.summary()
        rows = summary.itertuples(index=False)  # type: ignore[misc]
        for base, cases, mismatches in rows:
            table.add_row(str(base), str(cases), str(mismatches))

        table.add_section()
        table.add_row(
            "[bold]Total[/bold]",
            f"[bold]{result.case_count}[/bold]",
            f"[bold]{result.mismatch_count}[/bold]",
        )
        return table
