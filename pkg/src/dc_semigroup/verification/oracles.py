"""Brute-force closures used to check the construction."""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import chain

from ..algebra.constants import (
    COVERAGE_MAX_ELEMENTS,
    INTEGER_ORACLE_MAX_BASE,
    INTEGER_ORACLE_MAX_BOUND,
)
from ..algebra.digits import RadixDigits
from ..algebra.errors import BaseMismatchError, DomainError, ResourceLimitError
from ..algebra.intervals import BINARY_BASE, DigitInterval
from ..algebra.semigroup import DcSemigroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncatedExponentSet:
    """Exponents known exactly below ``bound``; nothing is said above it."""

    present: frozenset[int]
    bound: int
    base: int

    def __post_init__(self) -> None:
        RadixDigits.validate_base(self.base)
        outside = [e for e in self.present if not 0 <= e < self.bound]
        if outside:
            raise DomainError(
                f"Exponents {sorted(outside)} lie outside [0, {self.bound})"
            )

    def truncate(self, bound: int) -> "TruncatedExponentSet":
        """Restrict to a smaller bound."""
        if bound > self.bound:
            raise DomainError(f"Cannot extend bound {self.bound} to {bound}")
        return TruncatedExponentSet(
            frozenset(e for e in self.present if e < bound), bound, self.base
        )


@dataclass(frozen=True)
class ComparisonReport:
    """Outcome of comparing a semigroup with a truncated reference."""

    bound: int
    missing: frozenset[int]  # in the reference, not in the semigroup
    extra: frozenset[int]  # in the semigroup, not in the reference

    @property
    def matches(self) -> bool:
        return not self.missing and not self.extra

    @property
    def difference(self) -> frozenset[int]:
        return self.missing | self.extra


def _extremes_first(values: range) -> Iterator[int]:
    """Yield the last and first element of a range, then the rest."""
    if not values:
        return
    yield values[-1]
    if len(values) > 1:
        yield values[0]
    yield from values[1:-1]


class ClosureOracle:
    """Index-level and integer-level closures, independent of the construction."""

    @staticmethod
    def index_closure(
        exponents: Iterable[int], b: int, bound: int
    ) -> TruncatedExponentSet:
        """Close an exponent set under the index rule, truncated at bound.

        Present exponents p and q contribute p+q and p+q+1. In base 2 the
        exponent 0 stands for {1} and only acts as an identity.
        """
        RadixDigits.validate_base(b)
        start = set(exponents)
        if any(e < 0 for e in start):
            raise DomainError("Exponents must be non-negative")
        if start and bound <= max(start):
            raise DomainError(f"Bound {bound} must exceed every exponent in {start}")

        present = set(start)
        worklist = sorted(start)
        while worklist:
            p = worklist.pop()
            for q in list(present):
                for r in ClosureOracle._index_successors(p, q, b):
                    if r < bound and r not in present:
                        present.add(r)
                        worklist.append(r)

        logger.debug(
            "Index closure of %s in base %d: %d exponents", start, b, len(present)
        )
        return TruncatedExponentSet(frozenset(present), bound, b)

    @staticmethod
    def integer_closure(
        elements: Iterable[int], b: int, bound: int
    ) -> TruncatedExponentSet:
        """Close a set of integers below b**bound by the defining rules.

        The rules are multiplicative closure and digit-class completion. Each
        completed class is kept whole and classes are multiplied element by
        element, so none of the interval lemmas is assumed.
        """
        RadixDigits.validate_base(b)
        if b > INTEGER_ORACLE_MAX_BASE or bound > INTEGER_ORACLE_MAX_BOUND:
            raise ResourceLimitError(
                f"Integer closure is limited to base <= {INTEGER_ORACLE_MAX_BASE} "
                f"and bound <= {INTEGER_ORACLE_MAX_BOUND}, got base {b}, bound {bound}"
            )
        limit = b**bound
        values = list(elements)
        too_large = [x for x in values if x >= limit]
        if too_large:
            raise DomainError(f"Elements {too_large} are not below {b}^{bound}")

        present = {RadixDigits.digit_length(x, b) for x in values}
        worklist = sorted(present)
        while worklist:
            e = worklist.pop()
            for f in list(present):
                reached = ClosureOracle._class_product_exponents(
                    e, f, b, bound, present
                )
                for r in reached:
                    if r not in present:
                        present.add(r)
                        worklist.append(r)

        return TruncatedExponentSet(frozenset(present), bound, b)

    @staticmethod
    def compare(
        semigroup: DcSemigroup, reference: TruncatedExponentSet
    ) -> ComparisonReport:
        """Compare the exponents of a semigroup with a reference below its bound."""
        if semigroup.base != reference.base:
            raise BaseMismatchError(
                f"Semigroup base {semigroup.base} != reference base {reference.base}"
            )
        constructed = semigroup.exponents_upto(reference.bound)
        return ComparisonReport(
            reference.bound,
            missing=reference.present - constructed,
            extra=constructed - reference.present,
        )

    @staticmethod
    def product_exponents(
        a: DigitInterval,
        c: DigitInterval,
        b: int,
        max_elements: int = COVERAGE_MAX_ELEMENTS,
    ) -> frozenset[int] | None:
        """Return the digit lengths of all products of I_b(a) and I_b(c).

        Every element of the smaller interval is visited; for each one the
        digit classes hit by its multiples inside the other interval are
        found by exact division. Returns None when the smaller interval holds
        more than max_elements integers.
        """
        outer, inner = sorted(
            (a.integer_range(b), c.integer_range(b)), key=lambda r: r.stop - r.start
        )
        if outer.stop - outer.start > max_elements:
            return None

        lowest = RadixDigits.digit_length(outer[0] * inner[0], b)
        highest = RadixDigits.digit_length(outer[-1] * inner[-1], b)
        span = highest - lowest + 1

        found: set[int] = set()
        for x in _extremes_first(outer):
            first, last = x * inner[0], x * inner[-1]
            for e in range(
                RadixDigits.digit_length(first, b),
                RadixDigits.digit_length(last, b) + 1,
            ):
                if e in found:
                    continue
                low, high = max(b**e, first), min(b ** (e + 1) - 1, last)
                if -(-low // x) <= high // x:
                    found.add(e)
            if len(found) == span:
                break
        return frozenset(found)

    @staticmethod
    def _index_successors(p: int, q: int, b: int) -> tuple[int, ...]:
        if b == BINARY_BASE and (p == 0 or q == 0):
            return (p + q,)
        return (p + q, p + q + 1)

    @staticmethod
    def _class_product_exponents(
        e: int, f: int, b: int, bound: int, known: set[int]
    ) -> set[int]:
        """Return exponents below bound of products u*v, u in class e, v in class f."""
        # b**(e+f) <= u*v < b**(e+f+2), so at most two exponents can appear
        wanted = {s for s in (e + f, e + f + 1) if s < bound and s not in known}
        if not wanted:
            return set()

        limit = b**bound
        first, second = RadixDigits.digit_class(e, b), RadixDigits.digit_class(f, b)
        extremes = ((first[0], second[0]), (first[-1], second[-1]))
        found: set[int] = set()
        pairs = ((u, v) for u in first for v in second)
        for u, v in chain(extremes, pairs):
            w = u * v
            if w >= limit:
                continue
            found.add(RadixDigits.digit_length(w, b))
            if wanted <= found:
                break
        return found
