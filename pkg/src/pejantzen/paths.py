"""Where pejantzen keeps its KL cache and settings file.

Both directories follow the XDG base directory layout. ``PEJANTZEN_HOME``
(absolute) replaces that layout with ``$PEJANTZEN_HOME/cache`` and
``$PEJANTZEN_HOME/config``.
"""

from __future__ import annotations

import os
from pathlib import Path

from pejantzen.models import InvalidArgumentError

APP_NAME = "pejantzen"
HOME_ENV = "PEJANTZEN_HOME"

# kind -> (XDG variable, fallback under ~)
_XDG = {
    "cache": ("XDG_CACHE_HOME", ".cache"),
    "config": ("XDG_CONFIG_HOME", ".config"),
}


def _absolute_env(name: str) -> Path | None:
    value = os.environ.get(name, "")
    if value and Path(value).is_absolute():
        return Path(value)
    return None


def xdg_home(kind: str) -> Path:
    """XDG base directory for ``kind``; empty or relative values fall back to ~."""
    if kind not in _XDG:
        raise InvalidArgumentError(f"unknown directory kind {kind!r} (expected one of {sorted(_XDG)})")
    env_var, fallback = _XDG[kind]
    return _absolute_env(env_var) or Path.home() / fallback


def app_dir(kind: str) -> Path:
    """pejantzen's own ``kind`` directory."""
    home = _absolute_env(HOME_ENV)
    if home is not None and kind in _XDG:
        return home / kind
    return xdg_home(kind) / APP_NAME


CACHE_DIR = app_dir("cache")
CONFIG_DIR = app_dir("config")
