# tests/conftest.py

import os
import sys
from pathlib import Path

import pytest

# Добавляем корень backend в PYTHONPATH, чтобы импортировался пакет app
ROOT_DIR = Path(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

# Кэш пользователя не должен попадать в тесты
os.environ.pop("WITTLAB_CACHE_DIR", None)

from app.core.settings import settings  # noqa: E402
from app.core.witt.cache import reset_registry  # noqa: E402


@pytest.fixture(autouse=True, scope="session")
def isolated_cache(tmp_path_factory):
    """
    Один каталог кэша на всю сессию: универсальные многочлены строятся
    один раз, а файлы пишутся во временный каталог.
    """
    cache_dir = tmp_path_factory.mktemp("witt-cache")
    previous = settings.cache_dir
    settings.cache_dir = cache_dir
    reset_registry()
    yield cache_dir
    settings.cache_dir = previous
    reset_registry()


@pytest.fixture()
def fresh_cache(tmp_path):
    """Пустой каталог кэша и очищенный реестр для тестов файлового кэша."""
    reset_registry()
    yield tmp_path
    reset_registry()
