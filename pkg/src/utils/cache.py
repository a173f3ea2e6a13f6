"""
JSON file cache for expensive enumerations (Gamma-balls)
"""

import hashlib
import json
import os
from pathlib import Path
from typing import Any, Optional

from src.utils.log import get_logger

logger = get_logger("cache")


def get_cache_dir() -> Path:
    """Cache directory from FQT_CACHE_DIR (default ./cache); not created here"""
    return Path(os.getenv("FQT_CACHE_DIR") or "cache")


def get_cache_path(kind: str, key: str) -> Path:
    """Generate a unique cache file path based on the artefact kind and its key"""
    key_hash = hashlib.md5(key.encode()).hexdigest()
    return get_cache_dir() / f"{kind}_{key_hash}.json"


def load_from_cache(kind: str, key: str) -> Optional[Any]:
    cache_path = get_cache_path(kind, key)
    if not cache_path.exists():
        return None
    try:
        with open(cache_path, "r") as f:
            payload = json.load(f)
    except (json.JSONDecodeError, IOError):
        return None
    # md5 collisions are not a concern, a stale format is
    if not isinstance(payload, dict) or payload.get("key") != key:
        return None
    logger.debug("cache hit %s", cache_path.name)
    return payload.get("data")


def save_to_cache(kind: str, key: str, data: Any) -> None:
    cache_path = get_cache_path(kind, key)
    try:
        cache_path.parent.mkdir(parents=True, exist_ok=True)
        with open(cache_path, "w") as f:
            json.dump({"key": key, "data": data}, f)
    except IOError:
        pass  # recompute next time


def clear_cache() -> int:
    """Clear all cached artefacts

    Returns:
        int: Number of cache files deleted
    """
    count = 0
    cache_dir = get_cache_dir()
    if cache_dir.exists():
        for cache_file in cache_dir.glob("*.json"):
            try:
                cache_file.unlink()
                count += 1
            except OSError:
                pass
    return count
