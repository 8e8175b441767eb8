"""
Verification Report — записи отчёта verify.

Отчёт: запись-заголовок, строки случаев в отсортированном порядке, итоговые
записи по каждому набору и общий итог. Формат json — одна запись на строку;
таблица строится из тех же записей. Времени выполнения в записях нет.
"""

from __future__ import annotations

import json
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field

from ..enums import CaseStatus, OutputFormat

# ==================== Записи ====================


class ReportHeader(BaseModel):
    record: Literal["header"] = "header"
    suite: str
    seed: int
    p: list[int]
    m: int
    d: list[int]
    max_sw: int
    strict: bool = False


class ReportRow(BaseModel):
    record: Literal["case"] = "case"
    suite: str
    case: str
    expected: Any = None
    computed: Any = None
    certified: Optional[bool] = None
    status: CaseStatus


class ReportSummary(BaseModel):
    record: Literal["summary"] = "summary"
    suite: str
    total: int = 0
    passed: int = 0
    failed: int = 0
    uncertified: int = 0
    observed: int = 0
    extra: dict[str, Any] = Field(default_factory=dict)
    status: CaseStatus = CaseStatus.PASS


def summarize(suite: str, rows: list[ReportRow], strict: bool = False, **extra) -> ReportSummary:
    """
    Итог по строкам набора.

    FAIL, если есть FAIL-строки, или, в строгом режиме, UNCERTIFIED.
    """
    counts = {status: 0 for status in CaseStatus}
    for row in rows:
        counts[row.status] += 1
    failed = counts[CaseStatus.FAIL] > 0 or (strict and counts[CaseStatus.UNCERTIFIED] > 0)
    return ReportSummary(
        suite=suite,
        total=len(rows),
        passed=counts[CaseStatus.PASS],
        failed=counts[CaseStatus.FAIL],
        uncertified=counts[CaseStatus.UNCERTIFIED],
        observed=counts[CaseStatus.OBSERVED],
        extra=extra,
        status=CaseStatus.FAIL if failed else CaseStatus.PASS,
    )


class VerificationReport(BaseModel):
    """Полный отчёт одного запуска verify."""

    header: ReportHeader
    rows: list[ReportRow] = Field(default_factory=list)
    summaries: list[ReportSummary] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.status == CaseStatus.PASS for s in self.summaries)

    def records(self) -> list[BaseModel]:
        return [self.header, *self.rows, *self.summaries]

    # ==================== Рендеринг ====================

    def render_json(self) -> str:
        return "\n".join(r.model_dump_json() for r in self.records())

    def render_table(self) -> str:
        h = self.header
        lines = [
            f"suite={h.suite} seed={h.seed} p={','.join(map(str, h.p))} m={h.m} "
            f"d={','.join(map(str, h.d))} max_sw={h.max_sw} strict={h.strict}"
        ]
        cells = [("SUITE", "CASE", "EXPECTED", "COMPUTED", "CERT", "STATUS")]
        for row in self.rows:
            cert = "-" if row.certified is None else ("yes" if row.certified else "no")
            cells.append(
                (
                    row.suite,
                    row.case,
                    _cell(row.expected),
                    _cell(row.computed),
                    cert,
                    row.status.value,
                )
            )
        lines.extend(_format_table(cells))
        for s in self.summaries:
            extra = "".join(f" {k}={_cell(v)}" for k, v in sorted(s.extra.items()))
            lines.append(
                f"{s.suite}: {s.status.value} total={s.total} passed={s.passed} "
                f"failed={s.failed} uncertified={s.uncertified} observed={s.observed}{extra}"
            )
        return "\n".join(lines)

    def render(self, fmt: OutputFormat) -> str:
        return self.render_json() if fmt == OutputFormat.JSON else self.render_table()


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, str):
        return value
    return json.dumps(value, separators=(",", ":"))


def _format_table(cells: list[tuple[str, ...]]) -> list[str]:
    widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
    return ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]


__all__ = [
    "ReportHeader",
    "ReportRow",
    "ReportSummary",
    "VerificationReport",
    "summarize",
]
