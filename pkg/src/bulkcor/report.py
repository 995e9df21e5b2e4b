"""Check records shared by all verification suites ("report-v1")."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NOT_CHECKABLE = "not checkable"
INFO = "info"


@dataclass(frozen=True)
class Check:
    check_id: str
    status: str
    witness: object = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def as_dict(self) -> dict:
        return {"check_id": self.check_id, "status": self.status, "witness": self.witness}


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, check_id: str, ok: bool, witness=None) -> Check:
        c = Check(check_id, PASS if ok else FAIL, None if ok else witness)
        self.checks.append(c)
        return c

    def info(self, check_id: str, witness) -> Check:
        c = Check(check_id, INFO, witness)
        self.checks.append(c)
        return c

    def record(self, check: Check) -> None:
        self.checks.append(check)

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, check_id: str) -> Check:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def __contains__(self, check_id: str) -> bool:
        return any(c.check_id == check_id for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> str:
        return json.dumps([c.as_dict() for c in self.checks], indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status:>13}  {c.check_id}"
            if c.witness is not None:
                line += f"  [{c.witness}]"
            lines.append(line)
        return "\n".join(lines)
