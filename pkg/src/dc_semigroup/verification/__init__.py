"""Oracles and sweeps that check the construction."""

from .oracles import ClosureOracle, ComparisonReport, TruncatedExponentSet
from .sweep import SweepResult, VerificationSweep

__all__ = [
    "ClosureOracle",
    "ComparisonReport",
    "SweepResult",
    "TruncatedExponentSet",
    "VerificationSweep",
]
