"""The interval semigroup U_b of digit-length runs."""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import reduce

from .digits import RadixDigits
from .errors import DomainError, ExponentOverflowError

BINARY_BASE = 2


@dataclass(frozen=True, order=True)
class DigitInterval:
    """The run I_b(start, length) = [b**start, b**(start+length)).

    As an exponent set it is {start, ..., start + length - 1}. The base is
    supplied by the operation that interprets the interval.
    """

    start: int
    length: int

    def __post_init__(self) -> None:
        RadixDigits.validate_exponent(self.start)
        if self.length < 1:
            raise DomainError(f"Interval length must be >= 1, got {self.length}")
        try:
            RadixDigits.validate_exponent(self.start + self.length)
        except ExponentOverflowError as e:
            raise ExponentOverflowError(f"Interval {self} leaves exponent range") from e

    @property
    def end(self) -> int:
        """First exponent past the run."""
        return self.start + self.length

    def exponents(self) -> range:
        return range(self.start, self.end)

    def integer_range(self, b: int) -> range:
        """Return the integers of the run in base b."""
        RadixDigits.validate_base(b)
        return range(b**self.start, b**self.end)

    def is_unit(self) -> bool:
        """Check whether this is I(0,1), which in base 2 is the set {1}."""
        return self.start == 0 and self.length == 1


class IntervalAlgebra:
    """Product, powers and membership in U_b."""

    @staticmethod
    def product(a: DigitInterval, c: DigitInterval, b: int) -> DigitInterval:
        """Multiply two intervals of U_b.

        Starts and lengths add. In base 2 the interval I_2(0,1) = {1} is an
        identity element instead.
        """
        RadixDigits.validate_base(b)
        if b == BINARY_BASE:
            if a.is_unit():
                return c
            if c.is_unit():
                return a
        return DigitInterval(a.start + c.start, a.length + c.length)

    @staticmethod
    def power(a: DigitInterval, q: int, b: int) -> DigitInterval:
        """Return the q-fold product of a with itself in closed form."""
        RadixDigits.validate_base(b)
        if q < 1:
            raise DomainError(f"Interval power needs q >= 1, got {q}")
        if b == BINARY_BASE and a.is_unit():
            return a
        return DigitInterval(q * a.start, q * a.length)

    @staticmethod
    def fold_product(intervals: list[DigitInterval], b: int) -> DigitInterval:
        """Multiply a non-empty sequence of intervals left to right."""
        if not intervals:
            raise DomainError("Cannot multiply an empty sequence of intervals")
        return reduce(lambda x, y: IntervalAlgebra.product(x, y, b), intervals)

    @staticmethod
    def contains(a: DigitInterval, x: int, b: int) -> bool:
        """Check whether the digit length of x falls inside the run."""
        return a.start <= RadixDigits.digit_length(x, b) < a.end

    @staticmethod
    def merge_runs(intervals: Iterable[DigitInterval]) -> tuple[DigitInterval, ...]:
        """Merge overlapping or adjacent intervals into sorted maximal runs."""
        merged: list[DigitInterval] = []
        for interval in sorted(intervals):
            if merged and interval.start <= merged[-1].end:
                last = merged[-1]
                end = max(last.end, interval.end)
                merged[-1] = DigitInterval(last.start, end - last.start)
            else:
                merged.append(interval)
        return tuple(merged)
