# backend/app/core/settings.py

import os
from pathlib import Path

from pydantic import AliasChoices, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


def _default_cache_dir() -> Path:
    xdg = os.getenv("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "wittlab"


class Settings(BaseSettings):
    # Каталог кэша универсальных многочленов Витта
    cache_dir: Path = Field(
        default_factory=_default_cache_dir,
        validation_alias=AliasChoices("WITTLAB_CACHE_DIR", "CACHE_DIR", "cache_dir"),
    )

    # Допустимые характеристики p
    supported_primes: tuple[int, ...] = (2, 3, 5, 7)

    # Ограничение на длину векторов Витта (m+1); дальше универсальные многочлены непрактичны
    max_witt_length: int = Field(
        default=4,
        validation_alias=AliasChoices("WITTLAB_MAX_WITT_LENGTH", "max_witt_length"),
    )

    # Ограничение на d для симметрических степеней
    max_arity: int = Field(
        default=3,
        validation_alias=AliasChoices("WITTLAB_MAX_ARITY", "max_arity"),
    )

    # Seed по умолчанию для воспроизводимых прогонов verify
    default_seed: int = Field(
        default=1729,
        validation_alias=AliasChoices("WITTLAB_DEFAULT_SEED", "default_seed"),
    )

    # Число потоков для прогонов verify
    verify_workers: int = Field(
        default=1,
        validation_alias=AliasChoices("WITTLAB_VERIFY_WORKERS", "verify_workers"),
    )

    # Debug-режим: цветной консольный лог и уровень DEBUG
    app_debug: bool = False

    # JSON-логи (для агрегаторов)
    log_json: bool = False

    # Флаг тестового режима (можно переопределить переменной окружения TESTING=1)
    testing: bool = False

    # Настройки pydantic-settings (v2)
    model_config = SettingsConfigDict(
        env_file=".env",  # читаем переменные из .env
        env_file_encoding="utf-8",
        extra="ignore",  # игнорируем любые лишние переменные
    )


settings = Settings()

# Авто-определение тестового режима, если запущен pytest
if os.getenv("PYTEST_CURRENT_TEST"):
    settings.testing = True
