"""Check rows, reports, and the (optionally parallel) task runner.

Reports list every check performed, passes included, so a green run is as
auditable as a red one.  Row order is fixed by task submission order, which
makes sequential and parallel execution produce identical reports.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence


@dataclass
class CheckRow:
    check: str
    subject: str
    passed: bool
    detail: str = ""

    def to_jsonable(self) -> dict:
        out = {"check": self.check, "subject": self.subject,
               "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class HopfReport:
    rows: list[CheckRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def add(self, check: str, subject: str, passed: bool, detail: str = ""):
        self.rows.append(CheckRow(check, subject, bool(passed), detail))

    def extend(self, other: "HopfReport"):
        self.rows.extend(other.rows)

    def failures(self) -> list[CheckRow]:
        return [r for r in self.rows if not r.passed]

    def to_jsonable(self) -> list[dict]:
        return [r.to_jsonable() for r in self.rows]

    def __str__(self):
        lines = []
        for r in self.rows:
            mark = "ok " if r.passed else "FAIL"
            tail = f"  [{r.detail}]" if r.detail and not r.passed else ""
            lines.append(f"  {mark} {r.check}: {r.subject}{tail}")
        return "\n".join(lines)


def run_tasks(tasks: Sequence[tuple[str, Callable[[], list[CheckRow]]]],
              parallel: bool) -> list[CheckRow]:
    """Evaluate independent row-producing tasks, preserving task order."""
    if parallel and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(tasks))) as pool:
            futures = [pool.submit(fn) for _, fn in tasks]
            chunks = [f.result() for f in futures]
    else:
        chunks = [fn() for _, fn in tasks]
    rows: list[CheckRow] = []
    for chunk in chunks:
        rows.extend(chunk)
    return rows


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"
