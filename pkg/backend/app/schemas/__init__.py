# Схемы CLI: перечисления, параметры запуска, контракты ввода и отчётов
from .enums import CaseStatus, OutputFormat, Suite
from .run_config import RunConfig

__all__ = [
    "CaseStatus",
    "OutputFormat",
    "Suite",
    "RunConfig",
]
