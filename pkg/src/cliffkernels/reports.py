"""Verification report data model and rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    """One verified identity instance.

    status is "pass", "fail" or "degenerate" (a flagged sector where the
    identity is provably out of range and the documented fallback behaviour
    was asserted instead).  Only "fail" makes a suite fail."""

    check_id: str
    anchor: str
    params: dict
    status: str
    residual: str = ""
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    grid: dict
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "degenerate": 0}
        for c in self.checks:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    def to_json(self) -> str:
        return json.dumps({
            "suite": self.suite,
            "grid": self.grid,
            "elapsed_seconds": round(self.elapsed, 3),
            "passed": self.passed,
            "counts": self.counts,
            "checks": [{
                "id": c.check_id,
                "anchor": c.anchor,
                "parameters": c.params,
                "status": c.status,
                "residual": c.residual,
                "detail": c.detail,
            } for c in self.checks],
        }, indent=2, sort_keys=True)

    def render_text(self, verbose: bool = False) -> str:
        lines = [f"suite {self.suite}: grid {self.grid}"]
        for c in self.checks:
            if verbose or c.status != "pass":
                mark = {"pass": "ok", "fail": "FAIL", "degenerate": "degenerate"}[c.status]
                extra = f"  {c.detail}" if c.detail else ""
                res = f"  residual={c.residual}" if c.residual and c.status == "fail" else ""
                lines.append(f"  [{mark}] {c.check_id} {c.params} ({c.anchor}){extra}{res}")
        cnt = self.counts
        lines.append(
            f"suite {self.suite}: {cnt['pass']} pass, {cnt['fail']} fail, "
            f"{cnt['degenerate']} degenerate in {self.elapsed:.2f}s "
            f"-> {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)
