import pytest


@pytest.fixture(autouse=True)
def _no_cache_env(monkeypatch):
    # search results must never leak between tests through the JSONL cache
    monkeypatch.delenv("PLANAR_TURAN_CACHE", raising=False)
