"""Outcome records shared by every check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
INCONCLUSIVE = "inconclusive"


@dataclass
class Verdict:
    """Result of one check.

    A failing verdict carries ``counterexample``: the basis tuple involved and,
    where meaningful, both sides of the identity in canonical text form.
    """

    check: str
    status: str
    counterexample: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"check": self.check, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.details:
            out["details"] = self.details
        return out


def passed(check: str, **details) -> Verdict:
    return Verdict(check, PASS, details=details)


def failed(check: str, counterexample: dict[str, Any], **details) -> Verdict:
    return Verdict(check, FAIL, counterexample=counterexample, details=details)


def skipped(check: str, reason: str) -> Verdict:
    return Verdict(check, SKIPPED, details={"reason": reason})
