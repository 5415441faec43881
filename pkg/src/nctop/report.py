"""Command reports: machine (JSON) and human renderings of the same record."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

FINITE_FIELD = "finite-field: computed over F_p, not an algebraically closed field"
SAMPLE_BOUNDED = "sample-bounded: no counterexample found at this scale is not a proof"


@dataclass
class Report:
    command: str
    scale: dict[str, Any] = field(default_factory=dict)
    verdict: bool = True
    witnesses: list[Any] = field(default_factory=list)
    caveats: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    exit_code: int | None = None

    def code(self) -> int:
        if self.exit_code is not None:
            return self.exit_code
        return 0 if self.verdict else 1

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))

    def render(self) -> str:
        lines = [f"$ {self.command}"]
        if self.scale:
            lines.append("scale: " + ", ".join(f"{k}={v}" for k, v in sorted(self.scale.items())))
        lines.append(f"verdict: {'true' if self.verdict else 'false'}")
        for key, value in self.details.items():
            if isinstance(value, list):
                lines.append(f"{key}:")
                lines.extend(f"  {_line(v)}" for v in value)
            else:
                lines.append(f"{key}: {_line(value)}")
        if self.witnesses:
            lines.append("witnesses:")
            lines.extend(f"  {_line(w)}" for w in self.witnesses)
        for c in self.caveats:
            lines.append(f"caveat: {c}")
        return "\n".join(lines)


def _line(v: Any) -> str:
    if isinstance(v, dict):
        return "  ".join(f"{k}={_line(x)}" for k, x in v.items())
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)
