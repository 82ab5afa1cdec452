"""Exact digit-length arithmetic for arbitrary-size integers."""

from .constants import DIGIT_ALPHABET, MAX_EXPONENT, MIN_BASE
from .errors import DomainError, ExponentOverflowError


class RadixDigits:
    """Digit counting, digit classes and radix strings in a base b."""

    @staticmethod
    def validate_base(b: int) -> int:
        """Return b if it is a usable radix, raise DomainError otherwise."""
        if b < MIN_BASE:
            raise DomainError(f"Base must be an integer >= {MIN_BASE}, got {b!r}")
        return b

    @staticmethod
    def validate_positive(x: int) -> int:
        """Return x if it is a positive integer, raise DomainError otherwise."""
        if x < 1:
            raise DomainError(f"Digit length is undefined for {x!r}")
        return x

    @staticmethod
    def validate_exponent(e: int) -> int:
        """Return e if it is a non-negative machine-word exponent."""
        if e < 0:
            raise DomainError(f"Exponent must be a non-negative integer, got {e!r}")
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"Exponent {e} exceeds {MAX_EXPONENT}")
        return e

    @staticmethod
    def digit_length(x: int, b: int) -> int:
        """Return the exponent j with b**j <= x < b**(j+1).

        The exponent is one less than the number of base-b digits of x. It is
        found by comparing x against exact powers b**(2**k) and descending
        bit by bit, so no floating-point logarithm is involved.

        Raises:
            DomainError: If x < 1 or b < 2.

        """
        RadixDigits.validate_base(b)
        RadixDigits.validate_positive(x)
        if x < b:
            return 0

        # ladder[k] == b ** (2 ** k); the last rung squared exceeds x
        ladder = [b]
        while ladder[-1] * ladder[-1] <= x:
            ladder.append(ladder[-1] * ladder[-1])

        exponent = 0
        reached = 1
        for k in range(len(ladder) - 1, -1, -1):
            candidate = reached * ladder[k]
            if candidate <= x:
                reached = candidate
                exponent += 1 << k
        return RadixDigits.validate_exponent(exponent)

    @staticmethod
    def digit_class(e: int, b: int) -> range:
        """Return the integers with exponent e, i.e. [b**e, b**(e+1))."""
        RadixDigits.validate_base(b)
        RadixDigits.validate_exponent(e)
        low = b**e
        return range(low, low * b)

    @staticmethod
    def digit_string(x: int, b: int) -> str:
        """Return the base-b representation of x.

        Bases up to 36 use the digits 0-9 followed by a-z. Larger bases write
        each digit as a decimal number, separated by dots.
        """
        RadixDigits.validate_base(b)
        RadixDigits.validate_positive(x)
        digits: list[int] = []
        while x:
            x, digit = divmod(x, b)
            digits.append(digit)
        digits.reverse()

        if b <= len(DIGIT_ALPHABET):
            return "".join(DIGIT_ALPHABET[d] for d in digits)
        return ".".join(str(d) for d in digits)
