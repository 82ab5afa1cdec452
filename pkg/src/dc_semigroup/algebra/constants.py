"""Constants for digit-closed semigroup computations."""

# Radix
MIN_BASE = 2
DIGIT_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"

# Exponents are kept within machine-word range
MAX_EXPONENT = 2**63 - 1

# Resource guards
MAX_TAIL_MULTIPLIER = 10_000
INTEGER_ORACLE_MAX_BASE = 3
INTEGER_ORACLE_MAX_BOUND = 12
COVERAGE_MAX_ELEMENTS = 10**6
SWEEP_MAX_EXP = 12
SWEEP_MAX_BOUND = 500

# Verification sweep defaults
DEFAULT_VERIFY_BASES = (2, 5)
DEFAULT_VERIFY_MAX_EXP = 6
DEFAULT_VERIFY_BOUND = 60
INTEGER_CHECK_MAX_EXP = 4
INTEGER_CHECK_MAX_GENERATORS = 3

# Exit codes
EXIT_OK = 0
EXIT_NOT_MEMBER = 1
EXIT_MISMATCH = 1
EXIT_DOMAIN_ERROR = 3
EXIT_RESOURCE_ERROR = 4
