from __future__ import annotations

from pathlib import Path

import pytest


@pytest.fixture()
def tmp_cache_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    from pejantzen import cache, paths, settings

    cache_dir = tmp_path / "cache" / "pejantzen"
    config_dir = tmp_path / "config" / "pejantzen"
    monkeypatch.setattr(paths, "CACHE_DIR", cache_dir)
    monkeypatch.setattr(paths, "CONFIG_DIR", config_dir)
    monkeypatch.setattr(cache, "CACHE_DIR", cache_dir)
    monkeypatch.setattr(cache, "KL_CACHE_FILE", cache_dir / "kl.json")
    monkeypatch.setattr(settings, "SETTINGS_FILE", config_dir / "settings.json")
    return cache_dir


@pytest.fixture()
def fresh_kl_memo():
    """Start and finish with an empty Kazhdan-Lusztig memo."""
    from pejantzen import kl

    kl.clear_memo()
    yield
    kl.clear_memo()


@pytest.fixture(autouse=True)
def no_format_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep CLI tests independent of the caller's PEJANTZEN_FORMAT."""
    monkeypatch.delenv("PEJANTZEN_FORMAT", raising=False)
