"""
Environment-driven settings (values usually come from a .env file loaded by main.py)
"""

import os
from dataclasses import dataclass
from typing import Optional, Tuple

from src.utils.errors import ConfigError


@dataclass(frozen=True)
class Settings:
    q: str = "2"
    modulus: str = ""
    seed: int = 0
    workers: int = 1
    log_level: str = "WARNING"


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")


def load_settings() -> Settings:
    """Read FQT_* variables from the environment"""
    workers = _env_int("FQT_WORKERS", 1)
    if workers < 1:
        raise ConfigError("FQT_WORKERS must be at least 1")
    return Settings(
        q=os.getenv("FQT_Q", "2").strip() or "2",
        modulus=os.getenv("FQT_MODULUS", "").strip(),
        seed=_env_int("FQT_SEED", 0),
        workers=workers,
        log_level=os.getenv("FQT_LOG_LEVEL", "WARNING").strip().upper() or "WARNING",
    )


def _prime_power(n: int) -> Optional[Tuple[int, int]]:
    if n < 2:
        return None
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def parse_field_size(text: str) -> Tuple[int, int]:
    """
    Parse a field size given as ``p``, ``p^k`` or the integer ``p**k``

    Returns:
        (p, k) with p prime and k >= 1
    """
    raw = text.replace(" ", "")
    try:
        if "^" in raw:
            base, _, exp = raw.partition("^")
            p, k = int(base), int(exp)
            found = _prime_power(p)
            if found is None or found[1] != 1 or k < 1:
                raise ConfigError(f"field size {text!r} is not of the form p^k with p prime")
            return p, k
        found = _prime_power(int(raw))
    except ValueError:
        raise ConfigError(f"cannot read field size {text!r}")
    if found is None:
        raise ConfigError(f"field size {text!r} is not a prime power")
    return found
