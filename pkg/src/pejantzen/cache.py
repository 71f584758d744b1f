"""On-disk persistence of the Kazhdan-Lusztig memo."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from pejantzen import kl
from pejantzen.paths import CACHE_DIR

logger = logging.getLogger(__name__)

KL_CACHE_FILE = CACHE_DIR / "kl.json"
CACHE_VERSION = 1


def load_kl_cache(path: Path | None = None) -> int:
    """Merge a saved memo into the in-process one. Returns the record count.

    Missing, corrupt or wrong-version files are ignored.
    """
    path = path or KL_CACHE_FILE
    if not path.is_file():
        return 0
    try:
        with open(path) as f:
            data = json.load(f)
    except (json.JSONDecodeError, OSError) as exc:
        logger.warning("ignoring unreadable KL cache %s: %s", path, exc)
        return 0
    if not isinstance(data, dict) or data.get("cache_version") != CACHE_VERSION:
        logger.info("ignoring KL cache %s with unexpected version", path)
        return 0
    records = data.get("records")
    if not isinstance(records, list):
        return 0
    return kl.load_memo_records(records)


def save_kl_cache(path: Path | None = None) -> bool:
    """Write the in-process memo atomically. Returns False if the write failed."""
    path = path or KL_CACHE_FILE
    data = {"cache_version": CACHE_VERSION, "records": kl.memo_records()}
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".kl-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as f:
                json.dump(data, f)
            os.replace(tmp, path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
    except OSError as exc:
        logger.warning("could not save KL cache to %s: %s", path, exc)
        return False
    logger.debug("saved %d KL records to %s", len(data["records"]), path)
    return True
