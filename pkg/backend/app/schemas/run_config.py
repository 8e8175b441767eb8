"""
RunConfig — проверенные параметры одного запуска CLI.
"""

from pathlib import Path
from typing import Optional

from app.core.algebra.field import check_prime
from app.core.exceptions import DomainError, InvalidInput
from app.core.settings import settings
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from .enums import OutputFormat


def _split_ints(value):
    """"2,3" → [2, 3]; списки и одиночные числа пропускаются как есть."""
    if isinstance(value, str):
        parts = [x.strip() for x in value.split(",") if x.strip()]
        try:
            return [int(x) for x in parts]
        except ValueError as exc:
            raise ValueError(f"expected a comma-separated list of integers, got {value!r}") from exc
    if isinstance(value, int):
        return [value]
    return value


class RunConfig(BaseModel):
    """Параметры запуска: списки p и d, длина Витта, граница Sw, seed, формат вывода."""

    p_list: list[int] = Field(default_factory=lambda: [2, 3])
    m: int = 0
    d_list: list[int] = Field(default_factory=lambda: [2, 3])
    max_sw: int = 8
    seed: int = Field(default_factory=lambda: settings.default_seed)
    strict: bool = False
    cache_dir: Optional[Path] = None
    format: OutputFormat = OutputFormat.JSON

    model_config = {"frozen": True}

    @field_validator("p_list", "d_list", mode="before")
    @classmethod
    def _parse_list(cls, value):
        return _split_ints(value)

    @field_validator("p_list")
    @classmethod
    def _check_primes(cls, value: list[int]) -> list[int]:
        if not value:
            raise ValueError("at least one prime is required")
        for p in value:
            try:
                check_prime(p)
            except DomainError as exc:
                raise ValueError(exc.message) from exc
        return sorted(set(value))

    @field_validator("d_list")
    @classmethod
    def _check_arity(cls, value: list[int]) -> list[int]:
        if not value:
            raise ValueError("at least one d is required")
        for d in value:
            if not 2 <= d <= settings.max_arity:
                raise ValueError(f"d={d} is outside 2..{settings.max_arity}")
        return sorted(set(value))

    @field_validator("m")
    @classmethod
    def _check_m(cls, value: int) -> int:
        if value < 0 or value + 1 > settings.max_witt_length:
            raise ValueError(f"m must satisfy 0 <= m and m+1 <= {settings.max_witt_length}")
        return value

    @field_validator("max_sw")
    @classmethod
    def _check_max_sw(cls, value: int) -> int:
        if value < 0:
            raise ValueError("max-sw must be nonnegative")
        return value

    @model_validator(mode="after")
    def _resolve_cache_dir(self):
        if self.cache_dir is None:
            object.__setattr__(self, "cache_dir", Path(settings.cache_dir))
        return self

    @property
    def p(self) -> int:
        """Первое p из списка — для команд с одним p."""
        return self.p_list[0]

    @property
    def d(self) -> int:
        return self.d_list[0]

    @classmethod
    def build(cls, **values) -> "RunConfig":
        """
        Собрать конфигурацию из значений опций CLI.

        Raises:
            InvalidInput: если значение не проходит проверку
        """
        clean = {k: v for k, v in values.items() if v is not None}
        try:
            return cls(**clean)
        except ValidationError as exc:
            err = exc.errors()[0]
            field = ".".join(str(x) for x in err["loc"]) or None
            raise InvalidInput(
                f"Invalid value for '{field}': {err['msg']}", details={"field": field}
            ) from exc

    def header(self) -> dict:
        return {
            "seed": self.seed,
            "p": self.p_list,
            "m": self.m,
            "d": self.d_list,
            "max_sw": self.max_sw,
            "strict": self.strict,
        }
