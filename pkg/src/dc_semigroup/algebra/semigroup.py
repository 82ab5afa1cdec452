"""Canonical representation of digit-closed semigroups."""

from collections.abc import Iterable
from dataclasses import dataclass

from .digits import RadixDigits
from .errors import BaseMismatchError, DomainError
from .intervals import DigitInterval, IntervalAlgebra


@dataclass(frozen=True)
class DcSemigroup:
    """A union of full digit classes: disjoint runs plus an optional tail.

    The represented integer set is the union of I_b(run) over all runs
    together with [b**tail, +inf) when a tail is present. Instances are kept
    canonical: runs are sorted, separated by at least one missing exponent,
    and end strictly before the tail. Use ``normalize`` to build one from an
    arbitrary collection of intervals.
    """

    base: int
    runs: tuple[DigitInterval, ...] = ()
    tail: int | None = None

    def __post_init__(self) -> None:
        RadixDigits.validate_base(self.base)
        if self.tail is not None:
            RadixDigits.validate_exponent(self.tail)
        for previous, current in zip(self.runs, self.runs[1:], strict=False):
            if previous.end >= current.start:
                raise DomainError(f"Runs {previous} and {current} are not separated")
        if self.tail is not None and self.runs and self.runs[-1].end >= self.tail:
            raise DomainError(f"Run {self.runs[-1]} reaches the tail {self.tail}")

    @classmethod
    def normalize(
        cls,
        base: int,
        intervals: Iterable[DigitInterval],
        tail: int | None = None,
    ) -> "DcSemigroup":
        """Build the canonical semigroup covering the given runs and tail.

        Overlapping or adjacent runs are merged, and every run that reaches
        the tail is absorbed into it, lowering the tail to the run start.
        """
        merged = list(IntervalAlgebra.merge_runs(intervals))
        if tail is not None:
            while merged and merged[-1].end >= tail:
                tail = min(tail, merged.pop().start)

        return cls(base, tuple(merged), tail)

    @classmethod
    def empty(cls, base: int) -> "DcSemigroup":
        return cls(base)

    @classmethod
    def all_positive_integers(cls, base: int) -> "DcSemigroup":
        """Return [b**0, +inf), the whole of N*."""
        return cls(base, (), 0)

    def is_empty(self) -> bool:
        return not self.runs and self.tail is None

    def is_all_positive_integers(self) -> bool:
        return self.tail == 0

    def contains_exponent(self, e: int) -> bool:
        """Check whether the digit class with exponent e lies in the semigroup."""
        if self.tail is not None and e >= self.tail:
            return True
        return any(run.start <= e < run.end for run in self.runs)

    def member(self, x: int) -> bool:
        """Check whether the positive integer x belongs to the semigroup."""
        return self.contains_exponent(RadixDigits.digit_length(x, self.base))

    def equals(self, other: "DcSemigroup") -> bool:
        """Compare two canonical semigroups over the same base."""
        if self.base != other.base:
            raise BaseMismatchError(
                f"Cannot compare semigroups over bases {self.base} and {other.base}"
            )
        return self.runs == other.runs and self.tail == other.tail

    def exponents_upto(self, bound: int) -> frozenset[int]:
        """Return every exponent e < bound whose digit class is contained."""
        if bound < 0:
            raise DomainError(f"Bound must be non-negative, got {bound}")
        exponents: set[int] = set()
        for run in self.runs:
            exponents.update(range(run.start, min(run.end, bound)))
        if self.tail is not None:
            exponents.update(range(self.tail, bound))
        return frozenset(exponents)
