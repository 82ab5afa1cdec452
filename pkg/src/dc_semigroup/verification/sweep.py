"""Exhaustive comparison of the construction against the oracles."""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import chain, combinations
from typing import Any

import pandas as pd

from ..algebra.closure import ClosureBuilder
from ..algebra.constants import (
    INTEGER_CHECK_MAX_EXP,
    INTEGER_CHECK_MAX_GENERATORS,
    INTEGER_ORACLE_MAX_BASE,
    INTEGER_ORACLE_MAX_BOUND,
    SWEEP_MAX_BOUND,
    SWEEP_MAX_EXP,
)
from ..algebra.errors import DomainError, ResourceLimitError
from .oracles import ClosureOracle

logger = logging.getLogger(__name__)

CASE_COLUMNS = ["base", "exponents", "mismatch", "difference"]
CROSS_CHECK_COLUMNS = ["base", "elements", "mismatch", "difference"]


def _format_set(values: frozenset[int] | tuple[int, ...]) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def _nonempty_subsets(
    values: list[int], max_size: int | None = None
) -> Iterator[tuple[int, ...]]:
    top = len(values) if max_size is None else min(max_size, len(values))
    return chain.from_iterable(combinations(values, r) for r in range(1, top + 1))


@dataclass(frozen=True)
class SweepResult:
    """Rows of a verification sweep."""

    cases: pd.DataFrame
    cross_checks: pd.DataFrame

    @property
    def case_count(self) -> int:
        return len(self.cases)

    @property
    def mismatch_count(self) -> int:
        return int(self.cases["mismatch"].astype(bool).sum())  # type: ignore[misc]

    @property
    def cross_check_count(self) -> int:
        return len(self.cross_checks)

    @property
    def cross_check_mismatch_count(self) -> int:
        flags = self.cross_checks["mismatch"].astype(bool)
        return int(flags.sum())  # type: ignore[misc]

    @property
    def passed(self) -> bool:
        return self.mismatch_count == 0 and self.cross_check_mismatch_count == 0

    def summary(self) -> pd.DataFrame:
        """Return case and mismatch counts per base."""
        return (
            self.cases.groupby("base")  # type: ignore[misc]
            .agg(cases=("mismatch", "size"), mismatches=("mismatch", "sum"))
            .reset_index()
        )

    def mismatches(self) -> list[dict[str, Any]]:
        """Return every failing row of both tables."""
        failing = [
            self.cases[self.cases["mismatch"].astype(bool)],
            self.cross_checks[self.cross_checks["mismatch"].astype(bool)],
        ]
        return [
            row
            for frame in failing
            for row in frame.to_dict(orient="records")  # type: ignore[misc]
        ]


class VerificationSweep:
    """Compare the construction with the index closure over all small J.

    For every base and every non-empty J within {0, ..., max_exp}, the
    generators {b**j : j in J} are closed by the construction and compared
    with the index closure below ``bound``. With ``integer_check`` set, bases
    2 and 3 additionally close small sets of actual integers and compare the
    integer closure with both.
    """

    def __init__(
        self,
        bases: range,
        max_exp: int,
        bound: int,
        integer_check: bool = False,
    ) -> None:
        if bound < 1:
            raise DomainError(f"Bound must be positive, got {bound}")
        if max_exp < 0 or bound <= max_exp:
            raise DomainError(
                f"Bound {bound} must exceed the maximum exponent {max_exp}"
            )
        if max_exp > SWEEP_MAX_EXP:
            raise ResourceLimitError(
                f"Maximum exponent {max_exp} exceeds the sweep limit {SWEEP_MAX_EXP}"
            )
        if bound > SWEEP_MAX_BOUND:
            raise ResourceLimitError(
                f"Bound {bound} exceeds the sweep limit {SWEEP_MAX_BOUND}"
            )
        checks_integers = integer_check and bases.start <= INTEGER_ORACLE_MAX_BASE
        if checks_integers and bound > INTEGER_ORACLE_MAX_BOUND:
            raise ResourceLimitError(
                f"Integer cross-check needs bound <= {INTEGER_ORACLE_MAX_BOUND}"
            )
        self.bases = bases
        self.max_exp = max_exp
        self.bound = bound
        self.integer_check = integer_check

    def run(self) -> SweepResult:
        cases: list[dict[str, Any]] = []
        cross_checks: list[dict[str, Any]] = []
        for b in self.bases:
            logger.info("Sweeping base %d", b)
            cases.extend(self._sweep_base(b))
            if self.integer_check and b <= INTEGER_ORACLE_MAX_BASE:
                cross_checks.extend(self._cross_check_base(b))

        return SweepResult(
            pd.DataFrame(cases, columns=CASE_COLUMNS),
            pd.DataFrame(cross_checks, columns=CROSS_CHECK_COLUMNS),
        )

    def _sweep_base(self, b: int) -> Iterator[dict[str, Any]]:
        for exponents in _nonempty_subsets(list(range(self.max_exp + 1))):
            generators = [b**j for j in exponents]
            semigroup = ClosureBuilder.smallest_dc_semigroup(generators, b)
            reference = ClosureOracle.index_closure(exponents, b, self.bound)
            report = ClosureOracle.compare(semigroup, reference)
            if not report.matches:
                logger.warning(
                    "Base %d, J=%s differs at %s",
                    b,
                    exponents,
                    sorted(report.difference),
                )
            yield {
                "base": b,
                "exponents": _format_set(exponents),
                "mismatch": not report.matches,
                "difference": _format_set(report.difference),
            }

    def _cross_check_base(self, b: int) -> Iterator[dict[str, Any]]:
        top = min(INTEGER_CHECK_MAX_EXP, self.max_exp, self.bound - 1)
        limit = b**self.bound
        candidates = sorted(
            {x for j in range(top + 1) for x in (b**j, b**j + 1) if x < limit}
        )
        for elements in _nonempty_subsets(candidates, INTEGER_CHECK_MAX_GENERATORS):
            exponents = ClosureBuilder.exponent_set(elements, b)
            by_integers = ClosureOracle.integer_closure(elements, b, self.bound)
            by_index = ClosureOracle.index_closure(exponents, b, self.bound)
            semigroup = ClosureBuilder.smallest_dc_semigroup(elements, b)
            constructed = semigroup.exponents_upto(self.bound)

            difference = (by_integers.present ^ by_index.present) | (
                by_integers.present ^ constructed
            )
            if difference:
                logger.warning(
                    "Base %d, X=%s: integer closure differs at %s",
                    b,
                    elements,
                    sorted(difference),
                )
            yield {
                "base": b,
                "elements": _format_set(elements),
                "mismatch": bool(difference),
                "difference": _format_set(difference),
            }
