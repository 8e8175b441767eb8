# Контракты данных CLI:
# payload — полиномиальные аргументы команд
# report — записи отчётов verify (json-строки и таблица)

from .payload import parse_multi_poly, parse_poly, parse_witt
from .report import ReportHeader, ReportRow, ReportSummary, VerificationReport, summarize

__all__ = [
    "parse_poly",
    "parse_multi_poly",
    "parse_witt",
    "ReportHeader",
    "ReportRow",
    "ReportSummary",
    "VerificationReport",
    "summarize",
]
