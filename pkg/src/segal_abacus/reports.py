"""Verdicts with witnesses and coverage bookkeeping.

Every checker returns a CheckReport.  A report fails exactly when it has
witnesses; a report that could check nothing under the truncation is
vacuous, which is reported as such and never silently counted as a pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Witness:
    site: str
    equation: str
    offenders: tuple

    def to_dict(self) -> dict:
        return {
            "site": self.site,
            "equation": self.equation,
            "offenders": [str(o) for o in self.offenders],
        }

    def __str__(self) -> str:
        return f"{self.site}: {self.equation} offenders={list(map(str, self.offenders))}"


@dataclass
class CheckReport:
    name: str
    passed: bool
    witnesses: list[Witness] = field(default_factory=list)
    checked: int = 0
    coverage: list[str] = field(default_factory=list)
    precondition: str | None = None

    @property
    def vacuous(self) -> bool:
        return self.checked == 0 and self.precondition is None

    @staticmethod
    def from_witnesses(name: str, witnesses, checked: int, coverage=None) -> "CheckReport":
        ws = sorted(witnesses, key=str)
        return CheckReport(name, not ws, ws, checked, sorted(coverage or []))

    @staticmethod
    def precondition_failure(name: str, reason: str) -> "CheckReport":
        return CheckReport(name, False, [], 0, [], precondition=reason)

    @staticmethod
    def conjunction(name: str, reports) -> "CheckReport":
        reports = list(reports)
        ws = sorted((w for r in reports for w in r.witnesses), key=str)
        pre = next((r.precondition for r in reports if r.precondition), None)
        cov = sorted({c for r in reports for c in r.coverage})
        return CheckReport(
            name,
            all(r.passed for r in reports) and pre is None,
            ws,
            sum(r.checked for r in reports),
            cov,
            precondition=pre,
        )

    def exit_code(self) -> int:
        if self.precondition is not None:
            return 2
        if self.vacuous:
            return 3
        return 0 if self.passed else 1

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "verdict": "pass" if self.passed else "fail",
            "checked": self.checked,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }
        if self.coverage:
            out["coverage"] = list(self.coverage)
        if self.vacuous:
            out["verdict"] = "vacuous"
        if self.precondition is not None:
            out["verdict"] = "precondition"
            out["precondition"] = self.precondition
        return out

    def __str__(self) -> str:
        head = f"{self.name}: {self.to_dict()['verdict']} ({self.checked} checked)"
        if self.witnesses:
            shown = "\n  ".join(str(w) for w in self.witnesses[:5])
            more = "" if len(self.witnesses) <= 5 else f"\n  ... {len(self.witnesses) - 5} more"
            return f"{head}\n  {shown}{more}"
        return head
