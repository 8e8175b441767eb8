"""
Логирование WittLab на structlog.

structlog-логгеры (сервисы, кэш, команды) и обычные logging-логгеры ядра
(conductor, certify) проходят одну цепочку процессоров и один рендерер:
JSON-строки при LOG_JSON, иначе консольный вывод (цветной при APP_DEBUG).
Всё пишется в stderr, stdout принадлежит выводу команд.
"""

import logging
import sys
from typing import Any

import structlog
from app.core.settings import settings

_HANDLER_NAME = "wittlab-stderr"


class _StderrHandler(logging.StreamHandler):
    """Пишет в текущий sys.stderr, а не в поток на момент создания."""

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def _shared_processors() -> list[Any]:
    return [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.UnicodeDecoder(),
    ]


def _final_processors() -> list[Any]:
    if settings.log_json:
        return [
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(sort_keys=True),
        ]
    return [structlog.dev.ConsoleRenderer(colors=settings.app_debug)]


def configure_logging() -> None:
    """
    Настроить structlog и корневой logging-логгер.

    Повторный вызов заменяет обработчик, а не добавляет второй.
    """
    shared = _shared_processors()

    structlog.configure(
        processors=shared + [structlog.stdlib.ProcessorFormatter.wrap_for_formatter],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    formatter = structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=shared,
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            *_final_processors(),
        ],
    )
    handler = _StderrHandler()
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(formatter)

    root = logging.getLogger()
    for old in [h for h in root.handlers if h.get_name() == _HANDLER_NAME]:
        root.removeHandler(old)
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if settings.app_debug else logging.WARNING)

    # пул потоков verify
    logging.getLogger("concurrent.futures").setLevel(logging.WARNING)


def get_logger(name: str = __name__) -> structlog.stdlib.BoundLogger:
    """Get a structured logger instance.

    Example:
        >>> from app.core.logging import get_logger
        >>> logger = get_logger(__name__)
        >>> logger.info("witt_context_built", p=2, m=1)
    """
    return structlog.get_logger(name)
