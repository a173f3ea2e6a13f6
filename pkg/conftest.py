import sys
from pathlib import Path

# make ``src`` importable when pytest is run from the repository root
sys.path.insert(0, str(Path(__file__).resolve().parent))

import pytest


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Tests pass every setting explicitly; ignore FQT_* values from the shell"""
    for name in ("FQT_Q", "FQT_MODULUS", "FQT_SEED", "FQT_WORKERS", "FQT_CACHE_DIR", "FQT_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
