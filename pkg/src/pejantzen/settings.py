"""Persistence for user settings."""

from __future__ import annotations

import json

from pejantzen.paths import CONFIG_DIR

SETTINGS_FILE = CONFIG_DIR / "settings.json"

DEFAULT_SETTINGS = {
    "output_format": "json",
    "kl_cache": True,
    "census_workers": 4,
}

OUTPUT_FORMATS = ("json", "table")
MAX_WORKERS = 64


def _normalize_settings(data: object) -> dict:
    settings = dict(DEFAULT_SETTINGS)
    if not isinstance(data, dict):
        return settings

    output_format = data.get("output_format")
    if output_format in OUTPUT_FORMATS:
        settings["output_format"] = output_format

    kl_cache = data.get("kl_cache")
    if isinstance(kl_cache, bool):
        settings["kl_cache"] = kl_cache

    workers = data.get("census_workers")
    if isinstance(workers, int) and not isinstance(workers, bool) and 1 <= workers <= MAX_WORKERS:
        settings["census_workers"] = workers

    return settings


def load_settings() -> dict:
    """Load settings, returning defaults for missing/corrupt data."""
    if not SETTINGS_FILE.is_file():
        return dict(DEFAULT_SETTINGS)
    try:
        with open(SETTINGS_FILE) as f:
            data = json.load(f)
    except (json.JSONDecodeError, OSError):
        return dict(DEFAULT_SETTINGS)
    return _normalize_settings(data)


def save_settings(settings: dict) -> None:
    """Save settings to disk, keeping only known validated keys."""
    SETTINGS_FILE.parent.mkdir(parents=True, exist_ok=True)
    data = _normalize_settings(settings)
    try:
        with open(SETTINGS_FILE, "w") as f:
            json.dump(data, f, indent=2)
    except OSError:
        pass
