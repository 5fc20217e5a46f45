"""Suite reports: models, JSON/CSV emission and loading."""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

__all__ = [
    "CSV_HEADER",
    "Report",
    "ReportError",
    "ReportRecord",
    "ReportSummary",
    "emit_report",
    "format_report",
    "load_report",
]

CSV_HEADER = ("graph", "n", "e", "check", "lhs", "rhs", "holds", "micros")

Status = Literal["passed", "failed", "skipped"]


class ReportError(RuntimeError):
    """Raised when a report cannot be written or read."""


class ReportRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: str
    n: int
    e: int
    check: str
    lhs: float | None = None
    rhs: float | None = None
    holds: bool | None = None
    micros: int | None = None
    status: Status
    reason: str = ""


class ReportSummary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    skipped_reasons: list[str] = Field(default_factory=list)


class Report(BaseModel):
    records: list[ReportRecord] = Field(default_factory=list)
    summary: ReportSummary = Field(default_factory=ReportSummary)

    @classmethod
    def from_records(cls, records: Iterable[ReportRecord]) -> Report:
        items = list(records)
        summary = ReportSummary(
            total=len(items),
            passed=sum(1 for record in items if record.status == "passed"),
            failed=sum(1 for record in items if record.status == "failed"),
            skipped=sum(1 for record in items if record.status == "skipped"),
            skipped_reasons=[
                f"{record.graph}/{record.check}: {record.reason}"
                for record in items
                if record.status == "skipped"
            ],
        )
        return cls(records=items, summary=summary)

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0


def _cell(value: float | int | bool | None) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value)


def format_report(report: Report, fmt: str) -> str:
    if fmt == "json":
        return report.model_dump_json(indent=2) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for record in report.records:
            writer.writerow(
                [
                    record.graph,
                    record.n,
                    record.e,
                    record.check,
                    _cell(record.lhs),
                    _cell(record.rhs),
                    _cell(record.holds),
                    _cell(record.micros),
                ]
            )
        return buffer.getvalue()
    raise ReportError(f"Unknown report format '{fmt}'")


def emit_report(report: Report, fmt: str, path: Path) -> Path:
    payload = format_report(report, fmt)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(payload, encoding="utf-8")
    except OSError as exc:
        raise ReportError(f"Cannot write report to {path}: {exc}") from exc
    return path


def load_report(path: Path) -> Report:
    """Read a JSON report back; CSV output is a lossy export and is not reloaded."""

    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ReportError(f"Cannot read report {path}: {exc}") from exc
    try:
        return Report.model_validate_json(text)
    except ValidationError as exc:
        raise ReportError(f"Invalid report {path}: {exc}") from exc
