"""Machine-readable closure reports."""

import json
from dataclasses import dataclass
from typing import Any

from ..algebra.closure import ClosureOutcome
from ..algebra.intervals import DigitInterval
from ..algebra.semigroup import DcSemigroup


@dataclass(frozen=True)
class ClosureReport:
    """Everything the CLI reports about one closure computation.

    Runs use exponent semantics: {"start": s, "len": l} stands for every
    integer with between s+1 and s+l base-b digits.
    """

    base: int
    elements: tuple[str, ...]
    exponents: tuple[int, ...]
    runs: tuple[DigitInterval, ...]
    tail: int | None
    case: str
    d: int | None = None
    t: int | None = None

    @classmethod
    def from_outcome(
        cls, outcome: ClosureOutcome, elements: list[int]
    ) -> "ClosureReport":
        semigroup = outcome.semigroup
        return cls(
            base=semigroup.base,
            elements=tuple(str(x) for x in elements),
            exponents=tuple(sorted(outcome.exponents)),
            runs=semigroup.runs,
            tail=semigroup.tail,
            case=outcome.case.value,
            d=outcome.d,
            t=outcome.t,
        )

    def semigroup(self) -> DcSemigroup:
        return DcSemigroup(self.base, self.runs, self.tail)

    def to_dict(self) -> dict[str, Any]:
        return {
            "base": self.base,
            "elements": list(self.elements),
            "exponents": list(self.exponents),
            "runs": [{"start": r.start, "len": r.length} for r in self.runs],
            "tail": self.tail,
            "case": self.case,
            "d": self.d,
            "t": self.t,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ClosureReport":
        return cls(
            base=int(data["base"]),
            elements=tuple(str(x) for x in data["elements"]),
            exponents=tuple(int(e) for e in data["exponents"]),
            runs=tuple(
                DigitInterval(int(r["start"]), int(r["len"])) for r in data["runs"]
            ),
            tail=None if data["tail"] is None else int(data["tail"]),
            case=str(data["case"]),
            d=None if data.get("d") is None else int(data["d"]),
            t=None if data.get("t") is None else int(data["t"]),
        )

    def to_json(self) -> str:
        """Serialize with a fixed key order so output is canonical."""
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ClosureReport":
        return cls.from_dict(json.loads(text))
