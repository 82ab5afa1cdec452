"""Digit-class algebra: digit lengths, the interval semigroup and closures."""
