from __future__ import annotations

from pathlib import Path

import pytest

from pejantzen import paths
from pejantzen.models import InvalidArgumentError

_KINDS = [("cache", "XDG_CACHE_HOME", ".cache"), ("config", "XDG_CONFIG_HOME", ".config")]


@pytest.fixture(autouse=True)
def no_home_override(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(paths.HOME_ENV, raising=False)


@pytest.mark.parametrize(("kind", "env_var", "suffix"), _KINDS)
def test_unset_falls_back_to_home(monkeypatch: pytest.MonkeyPatch, kind: str, env_var: str, suffix: str) -> None:
    """No XDG variable means ~/.cache or ~/.config."""
    monkeypatch.delenv(env_var, raising=False)
    assert paths.xdg_home(kind) == Path.home() / suffix
    assert paths.app_dir(kind) == Path.home() / suffix / "pejantzen"


@pytest.mark.parametrize(("kind", "env_var", "suffix"), _KINDS)
def test_absolute_xdg_value_is_used(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path, kind: str, env_var: str, suffix: str
) -> None:
    """An absolute XDG value replaces the default."""
    monkeypatch.setenv(env_var, str(tmp_path / "xdg"))
    assert paths.app_dir(kind) == tmp_path / "xdg" / "pejantzen"


@pytest.mark.parametrize(("kind", "env_var", "suffix"), _KINDS)
@pytest.mark.parametrize("value", ["", "relative/path"])
def test_empty_or_relative_xdg_value_is_ignored(
    monkeypatch: pytest.MonkeyPatch, kind: str, env_var: str, suffix: str, value: str
) -> None:
    """Empty and relative XDG values fall back to the default."""
    monkeypatch.setenv(env_var, value)
    assert paths.xdg_home(kind) == Path.home() / suffix


@pytest.mark.parametrize(("kind", "env_var", "suffix"), _KINDS)
def test_home_override_wins(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path, kind: str, env_var: str, suffix: str
) -> None:
    """PEJANTZEN_HOME puts both directories side by side, ahead of XDG."""
    monkeypatch.setenv(env_var, str(tmp_path / "xdg"))
    monkeypatch.setenv(paths.HOME_ENV, str(tmp_path / "pj"))
    assert paths.app_dir(kind) == tmp_path / "pj" / kind


def test_relative_home_override_is_ignored(monkeypatch: pytest.MonkeyPatch) -> None:
    """A relative PEJANTZEN_HOME is treated as unset."""
    monkeypatch.delenv("XDG_CACHE_HOME", raising=False)
    monkeypatch.setenv(paths.HOME_ENV, "pj")
    assert paths.app_dir("cache") == Path.home() / ".cache" / "pejantzen"


def test_unknown_kind() -> None:
    """Only cache and config directories exist."""
    with pytest.raises(InvalidArgumentError):
        paths.xdg_home("data")


def test_dirs_are_namespaced() -> None:
    """Module-level directories are computed at import."""
    assert paths.CACHE_DIR.name in ("pejantzen", "cache")
    assert paths.CONFIG_DIR.name in ("pejantzen", "config")
