"""
Кэш универсальных многочленов Витта.

Файл witt_p{p}_m{m}.txt:
    wittlab-universal v1 p=<p> m=<m> sha256=<hex>
    S 0 [[[0,0,1,0],1],[[1,0,0,0],1]]
    ...
Контрольная сумма покрывает все строки после заголовка.

Внутри процесса контексты хранятся в реестре: один WittContext на (p, m),
построение под блокировкой, дальше только чтение.
"""

from __future__ import annotations

import hashlib
import json
import re
import threading
from pathlib import Path
from typing import Optional

from app.core.exceptions import CacheCorruptError, InternalConsistencyError
from app.core.logging import get_logger
from app.core.settings import settings

from .universal import (
    KINDS,
    UniversalPoly,
    WittContext,
    check_witt_length,
    spot_check,
    witt_universal_polys,
    witt_variable_names,
)

logger = get_logger(__name__)

CACHE_VERSION = "v1"
_HEADER_RE = re.compile(r"^wittlab-universal (\S+) p=(\d+) m=(\d+) sha256=([0-9a-f]{64})$")
_FILE_RE = re.compile(r"^witt_p\d+_m\d+\.txt$")

_registry: dict[tuple[int, int], WittContext] = {}
_registry_lock = threading.Lock()


def resolve_cache_dir(cache_dir: Optional[Path] = None) -> Path:
    return Path(cache_dir) if cache_dir else Path(settings.cache_dir)


def cache_path(p: int, m: int, cache_dir: Optional[Path] = None) -> Path:
    return resolve_cache_dir(cache_dir) / f"witt_p{p}_m{m}.txt"


def _body_lines(ctx: WittContext) -> list[str]:
    lines = []
    for kind in KINDS:
        for n, poly in enumerate(ctx.polys(kind)):
            lines.append(f"{kind} {n} {json.dumps(poly.to_pairs(), separators=(',', ':'))}")
    return lines


def _checksum(lines: list[str]) -> str:
    return hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()


def serialize_context(ctx: WittContext) -> str:
    body = _body_lines(ctx)
    header = f"wittlab-universal {CACHE_VERSION} p={ctx.p} m={ctx.m} sha256={_checksum(body)}"
    return "\n".join([header, *body]) + "\n"


def parse_context(text: str, path: Optional[Path] = None) -> WittContext:
    """
    Разобрать файл кэша.

    Raises:
        CacheCorruptError: неизвестная версия, неверная сумма или нехватка строк
    """
    lines = text.splitlines()
    if not lines:
        raise CacheCorruptError("Cache file is empty", path)
    match = _HEADER_RE.match(lines[0])
    if not match:
        raise CacheCorruptError("Cache header is malformed", path)
    version, p, m, digest = match.group(1), int(match.group(2)), int(match.group(3)), match.group(4)
    if version != CACHE_VERSION:
        raise CacheCorruptError(f"Unsupported cache version {version}", path)
    body = lines[1:]
    if _checksum(body) != digest:
        raise CacheCorruptError("Cache checksum mismatch", path)

    names = witt_variable_names(m)
    polys: dict[str, dict[int, UniversalPoly]] = {k: {} for k in KINDS}
    for lineno, line in enumerate(body, start=2):
        try:
            kind, n_str, payload = line.split(" ", 2)
            n = int(n_str)
            pairs = json.loads(payload)
            terms = tuple(sorted((tuple(int(e) for e in exps), int(c)) for exps, c in pairs))
        except (ValueError, TypeError) as exc:
            raise CacheCorruptError(f"Cache line {lineno} is malformed", path) from exc
        if kind not in polys or any(len(exps) != len(names) for exps, _ in terms):
            raise CacheCorruptError(f"Cache line {lineno} is malformed", path)
        polys[kind][n] = UniversalPoly(terms, len(names))

    for kind in KINDS:
        if sorted(polys[kind]) != list(range(m + 1)):
            raise CacheCorruptError(f"Cache is missing {kind} polynomials", path)

    return WittContext(
        p=p,
        m=m,
        sum_polys=tuple(polys["S"][n] for n in range(m + 1)),
        prod_polys=tuple(polys["P"][n] for n in range(m + 1)),
        neg_polys=tuple(polys["N"][n] for n in range(m + 1)),
        variables=names,
    )


def save_context(ctx: WittContext, cache_dir: Optional[Path] = None) -> Path:
    path = cache_path(ctx.p, ctx.m, cache_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(serialize_context(ctx), encoding="utf-8")
    tmp.replace(path)
    logger.info("witt_cache_written", path=str(path), p=ctx.p, m=ctx.m)
    return path


def load_context(p: int, m: int, cache_dir: Optional[Path] = None) -> Optional[WittContext]:
    """Прочитать контекст из кэша; None, если файла нет."""
    path = cache_path(p, m, cache_dir)
    if not path.exists():
        return None
    ctx = parse_context(path.read_text(encoding="utf-8"), path)
    if (ctx.p, ctx.m) != (p, m):
        raise CacheCorruptError(f"Cache file describes p={ctx.p} m={ctx.m}", path)
    if not spot_check(ctx):
        raise CacheCorruptError("Cached polynomials fail the ghost spot check", path)
    logger.debug("witt_cache_loaded", path=str(path), p=p, m=m)
    return ctx


def get_context(
    p: int, m: int, cache_dir: Optional[Path] = None, persist: bool = True
) -> WittContext:
    """
    WittContext для (p, m): из реестра, из файла кэша или построенный заново.

    Raises:
        DomainError: p или m вне допустимого набора
        CacheCorruptError: файл кэша повреждён
    """
    key = (p, m)
    ctx = _registry.get(key)
    if ctx is not None:
        return ctx
    with _registry_lock:
        ctx = _registry.get(key)
        if ctx is not None:
            return ctx
        check_witt_length(m)
        ctx = load_context(p, m, cache_dir) if persist else None
        if ctx is None:
            ctx = witt_universal_polys(p, m)
            if persist:
                try:
                    save_context(ctx, cache_dir)
                except OSError as exc:
                    logger.warning("witt_cache_write_failed", error=str(exc), p=p, m=m)
        _registry[key] = ctx
        return ctx


def build_cache(p: int, m: int, cache_dir: Optional[Path] = None) -> Path:
    """Построить контекст заново, проверить его и записать в кэш."""
    ctx = witt_universal_polys(p, m)
    if not spot_check(ctx):
        raise InternalConsistencyError("Freshly built polynomials fail the ghost spot check")
    path = save_context(ctx, cache_dir)
    with _registry_lock:
        _registry[(p, m)] = ctx
    return path


def inspect_cache(p: int, m: int, cache_dir: Optional[Path] = None) -> dict:
    """Сводка по файлу кэша: размеры многочленов и их запись."""
    check_witt_length(m)
    path = cache_path(p, m, cache_dir)
    ctx = load_context(p, m, cache_dir)
    if ctx is None:
        return {"path": str(path), "exists": False, "polys": []}
    rows = []
    for kind in KINDS:
        for n, poly in enumerate(ctx.polys(kind)):
            rows.append(
                {
                    "kind": kind,
                    "n": n,
                    "terms": len(poly.terms),
                    "degree": poly.degree(),
                    "poly": poly.pretty(ctx.variables),
                }
            )
    return {"path": str(path), "exists": True, "p": p, "m": m, "polys": rows}


def clear_cache(cache_dir: Optional[Path] = None) -> int:
    """Удалить файлы кэша; возвращает число удалённых файлов."""
    directory = resolve_cache_dir(cache_dir)
    removed = 0
    if directory.is_dir():
        for path in directory.iterdir():
            if path.is_file() and _FILE_RE.match(path.name):
                path.unlink()
                removed += 1
    reset_registry()
    logger.info("witt_cache_cleared", path=str(directory), removed=removed)
    return removed


def reset_registry() -> None:
    with _registry_lock:
        _registry.clear()
