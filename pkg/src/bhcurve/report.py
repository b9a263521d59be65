"""Verification reports: an ordered list of named checks plus optional artifacts."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Any

PASS = "pass"
FAIL = "fail"


@dataclass
class Check:
    name: str
    status: str
    details: Any = None

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "details": self.details}


@dataclass
class Report:
    command: str
    params: dict = dc_field(default_factory=dict)
    checks: list[Check] = dc_field(default_factory=list)
    artifacts: dict = dc_field(default_factory=dict)

    def add(self, name: str, ok: bool, details: Any = None) -> bool:
        self.checks.append(Check(name, PASS if ok else FAIL, details))
        return ok

    @property
    def ok(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "checks": [c.to_dict() for c in self.checks],
            "artifacts": self.artifacts,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        checks = [Check(c["name"], c["status"], c.get("details")) for c in d["checks"]]
        return cls(d["command"], d.get("params", {}), checks, d.get("artifacts", {}))

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        head = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()) if v is not None)
        lines = [f"{self.command} {head}".rstrip()]
        for c in self.checks:
            det = "" if c.details is None else f"  {_short(c.details)}"
            lines.append(f"  [{c.status.upper()}] {c.name}{det}")
        for name in sorted(self.artifacts):
            val = self.artifacts[name]
            if isinstance(val, str) and "\n" in val:
                lines.append(f"{name}:")
                lines.extend("  " + s for s in val.splitlines())
            elif isinstance(val, list):
                lines.append(f"{name}:")
                lines.extend(f"  {_short(v)}" for v in val)
            else:
                lines.append(f"{name}: {_short(val)}")
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines)


def _short(v) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v, sort_keys=True)
