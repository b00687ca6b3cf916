# conftest.py
import pytest

from app import create_app
from app.yv.generator import YVCache, reset_yv_caches


@pytest.fixture
def cache():
    """Fresh in-memory polynomial cache (Q_0 and Q_1 only)"""
    return YVCache()


@pytest.fixture(scope='session')
def shared_cache():
    """One cache for the heavier sweeps so each Q_n is built once"""
    return YVCache()


@pytest.fixture
def cache_path(tmp_path):
    return str(tmp_path / 'yv_cache.json')


@pytest.fixture
def app(cache_path):
    app = create_app('testing', YV_CACHE=cache_path)
    yield app
    reset_yv_caches()


@pytest.fixture
def runner(app):
    return app.test_cli_runner()
