"""Smallest digit-closed semigroup containing a finite set of integers."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from itertools import groupby

from .constants import MAX_TAIL_MULTIPLIER
from .digits import RadixDigits
from .errors import DomainError, ResourceLimitError
from .intervals import BINARY_BASE, DigitInterval, IntervalAlgebra
from .semigroup import DcSemigroup

logger = logging.getLogger(__name__)

ExponentSet = frozenset[int]
RunDecomposition = tuple[DigitInterval, ...]


@dataclass(frozen=True)
class TailAt:
    """I_b(start, +inf) is contained in the semigroup."""

    start: int


@dataclass(frozen=True)
class AllPositiveIntegers:
    """The semigroup is the whole of N*."""


@dataclass(frozen=True)
class NoTail:
    """Only {1} is known; it generates nothing further."""


TailResult = TailAt | AllPositiveIntegers | NoTail


class ClosureCase(Enum):
    """Which branch of the construction produced a semigroup."""

    EMPTY = "empty"
    SHIFTED = "1"  # smallest exponent positive
    BINARY_UNIT = "2"  # 1 in X, base 2
    EVERYTHING = "3"  # a one-digit element, base > 2


@dataclass(frozen=True)
class ClosureOutcome:
    """A constructed semigroup with the data that led to it."""

    semigroup: DcSemigroup
    exponents: ExponentSet
    case: ClosureCase
    d: int | None = None
    t: int | None = None
    products: RunDecomposition = field(default=(), compare=False)


class ClosureBuilder:
    """Construction of the smallest b-dc-semigroup containing X."""

    @staticmethod
    def exponent_set(elements: Iterable[int], b: int) -> ExponentSet:
        """Return J, the set of digit lengths of the elements."""
        return frozenset(RadixDigits.digit_length(x, b) for x in elements)

    @staticmethod
    def decompose_runs(exponents: Iterable[int]) -> RunDecomposition:
        """Split an exponent set into maximal runs of consecutive integers."""
        ordered = sorted(set(exponents))
        runs: list[DigitInterval] = []
        for _, group in groupby(enumerate(ordered), key=lambda pair: pair[1] - pair[0]):
            block = [value for _, value in group]
            runs.append(DigitInterval(block[0], len(block)))
        return tuple(runs)

    @staticmethod
    def tail_multiplier(j: int, length: int) -> int:
        """Return d = ceil(j / length)."""
        return -(-j // length)

    @staticmethod
    def tail_start(j: int, length: int, b: int) -> TailResult:
        """Return what I_b(j, length) being contained forces on the tail.

        With d = ceil(j / length): d >= 1 forces I_b(d*j, +inf); d == 0 means
        j == 0, which yields all of N* unless the base is 2 and the interval
        is just {1}.
        """
        RadixDigits.validate_base(b)
        RadixDigits.validate_exponent(j)
        if length < 1:
            raise DomainError(f"Run length must be >= 1, got {length}")

        d = ClosureBuilder.tail_multiplier(j, length)
        if d >= 1:
            return TailAt(d * j)
        if b > BINARY_BASE or length >= 2:  # noqa: PLR2004
            return AllPositiveIntegers()
        return NoTail()

    @staticmethod
    def enumerate_multiset_products(
        runs: RunDecomposition, d: int, b: int
    ) -> RunDecomposition:
        """Return the products of every multiset of 1 to d-1 runs.

        Products of e factors are built from those of e-1 factors, one more
        run at a time, and deduplicated at each level. By commutativity this
        yields exactly the products over combinations with repetition.
        """
        ClosureBuilder._check_enumeration(runs, d)

        products: set[DigitInterval] = set(runs)
        level: set[DigitInterval] = set(runs)
        for _ in range(2, d):
            level = {IntervalAlgebra.product(p, r, b) for p in level for r in runs}
            products |= level
        return tuple(sorted(products))

    @staticmethod
    def covering_products(
        runs: RunDecomposition, d: int, b: int
    ) -> RunDecomposition:
        """Return maximal runs covering the products of 1 to d-1 runs.

        Covers the same exponents as enumerate_multiset_products, but each
        level is merged into maximal runs before the next multiplication.
        The runs must not contain exponent 0.
        """
        ClosureBuilder._check_enumeration(runs, d)
        if min(r.start for r in runs) < 1:
            raise DomainError("Merged product enumeration needs positive exponents")

        level = IntervalAlgebra.merge_runs(runs)
        covered: list[DigitInterval] = list(level)
        for _ in range(2, d):
            level = IntervalAlgebra.merge_runs(
                IntervalAlgebra.product(p, r, b) for p in level for r in runs
            )
            covered.extend(level)
        return IntervalAlgebra.merge_runs(covered)

    @staticmethod
    def _check_enumeration(runs: RunDecomposition, d: int) -> None:
        if not runs:
            raise DomainError("Cannot enumerate products of an empty run list")
        if d < 2:  # noqa: PLR2004
            raise DomainError(f"Product enumeration needs d >= 2, got {d}")
        if d > MAX_TAIL_MULTIPLIER:
            raise ResourceLimitError(
                f"d = {d} exceeds the enumeration limit {MAX_TAIL_MULTIPLIER}"
            )

    @staticmethod
    def build(elements: Iterable[int], b: int) -> ClosureOutcome:
        """Construct the smallest b-dc-semigroup containing the elements."""
        RadixDigits.validate_base(b)
        exponents = ClosureBuilder.exponent_set(elements, b)

        if not exponents:
            logger.warning("Empty generator set; the closure is empty")
            return ClosureOutcome(DcSemigroup.empty(b), exponents, ClosureCase.EMPTY)

        if 0 in exponents and b > BINARY_BASE:
            logger.debug("One-digit generator in base %d: all of N*", b)
            return ClosureOutcome(
                DcSemigroup.all_positive_integers(b),
                exponents,
                ClosureCase.EVERYTHING,
            )

        if 0 in exponents:
            unit = DigitInterval(0, 1)
            rest = exponents - {0}
            if not rest:
                return ClosureOutcome(
                    DcSemigroup(b, (unit,)), exponents, ClosureCase.BINARY_UNIT
                )
            shifted = ClosureBuilder._build_shifted(rest, b)
            semigroup = DcSemigroup.normalize(
                b, (*shifted.semigroup.runs, unit), shifted.semigroup.tail
            )
            return ClosureOutcome(
                semigroup,
                exponents,
                ClosureCase.BINARY_UNIT,
                shifted.d,
                shifted.t,
                shifted.products,
            )

        return ClosureBuilder._build_shifted(exponents, b)

    @staticmethod
    def smallest_dc_semigroup(elements: Iterable[int], b: int) -> DcSemigroup:
        """Return the smallest b-dc-semigroup containing the elements."""
        return ClosureBuilder.build(elements, b).semigroup

    @staticmethod
    def _build_shifted(exponents: ExponentSet, b: int) -> ClosureOutcome:
        """Handle an exponent set whose minimum j0 is positive."""
        first = ClosureBuilder.decompose_runs(exponents)[0]
        j0, l0 = first.start, first.length
        d = ClosureBuilder.tail_multiplier(j0, l0)
        t = d * j0
        logger.debug("j0=%d l0=%d d=%d t=%d", j0, l0, d, t)

        if d == 1:
            return ClosureOutcome(
                DcSemigroup.normalize(b, (), t), exponents, ClosureCase.SHIFTED, d, t
            )

        runs = ClosureBuilder.decompose_runs(j for j in exponents if j < t)
        products = ClosureBuilder.covering_products(runs, d, b)
        logger.debug("%d merged product runs below the tail", len(products))
        return ClosureOutcome(
            DcSemigroup.normalize(b, products, t),
            exponents,
            ClosureCase.SHIFTED,
            d,
            t,
            products,
        )
