"""Decision outcomes with checkable evidence.

Every decision procedure in the package answers yes, no, or unknown and
says how it got there.  A yes for an existence question carries a witness
that verify() can recheck from scratch; a no carries the name of the
obstruction; unknown means a budget or method gap, never an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .sumset import GroupSet

__all__ = [
    "YES",
    "NO",
    "UNKNOWN",
    "DecisionCertificate",
    "SearchBudget",
]

YES = "yes"
NO = "no"
UNKNOWN = "unknown"

# Methods a certificate may cite.  Bounds prove no; constructions and
# searches prove yes; exhaustion can prove either.
KNOWN_METHODS = frozenset(
    {
        "definition",
        "trivial",
        "subgroup",
        "bound-size-gap",
        "bound-subgroup-gap",
        "bound-solidity",
        "construction-ap",
        "construction-pair",
        "construction-subgroup",
        "completion-diffset",
        "random-build",
        "exhaustive",
        "budget",
    }
)


@dataclass(frozen=True)
class DecisionCertificate:
    """Outcome of one decision, with enough context to recheck it."""

    problem: str
    verdict: str
    method: str
    witness: Optional[GroupSet] = None
    detail: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in (YES, NO, UNKNOWN):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.method not in KNOWN_METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.verdict == YES and self.witness is None:
            raise ValueError("a yes verdict needs a witness")
        if self.verdict != YES and self.witness is not None:
            raise ValueError("only a yes verdict carries a witness")

    def verify(self) -> bool:
        """Recheck the witness against the stated problem, from scratch.

        Only yes verdicts are checkable; anything else returns True
        vacuously so callers can assert on every certificate alike.
        """
        if self.verdict != YES:
            return True
        from . import complements, supplements

        if self.problem == "minimal-complement-for":
            c = self.detail["base"]
            return complements.is_minimal_complement_for(self.witness, c)
        if self.problem == "maximal-supplement-for":
            c = self.detail["base"]
            return supplements.is_maximal_supplement_for(self.witness, c)
        raise ValueError(f"no checker for problem {self.problem!r}")

    def summary(self) -> str:
        bits = [self.problem, self.verdict, f"via {self.method}"]
        if self.witness is not None:
            bits.append(f"witness size {len(self.witness)}")
        return ", ".join(bits)


@dataclass
class SearchBudget:
    """Caps for exhaustive scans so unknown stays reachable."""

    max_candidates: int = 1 << 22
    max_nodes: int = 1 << 22

    def __post_init__(self):
        if self.max_candidates < 1 or self.max_nodes < 1:
            raise ValueError("budget caps must be positive")
