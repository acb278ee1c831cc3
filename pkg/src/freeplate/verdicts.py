"""Structured pass/fail records emitted by the verification scans."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class VerdictRecord:
    """Outcome of one certified check.

    ``worst_margin`` is the signed slack of the checked inequality (the
    minimum of a quantity that should be nonnegative); the check passes
    exactly when ``worst_margin >= -tolerance``.  ``location`` records where
    the worst margin occurred.
    """

    check_id: str
    params: dict[str, Any] = field(default_factory=dict)
    worst_margin: float = 0.0
    tolerance: float = 0.0
    location: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.worst_margin >= -self.tolerance

    def as_dict(self) -> dict[str, Any]:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "pass": self.passed,
            "worst_margin": self.worst_margin,
            "tolerance": self.tolerance,
            "location": self.location,
        }


def summarize(records) -> dict[str, Any]:
    """Aggregate a verdict list into a deterministic report payload."""
    ordered = sorted(records, key=lambda r: (r.check_id, sorted(r.params.items())))
    return {
        "checks": [r.as_dict() for r in ordered],
        "total": len(ordered),
        "failed": sum(not r.passed for r in ordered),
        "all_pass": all(r.passed for r in ordered),
    }
