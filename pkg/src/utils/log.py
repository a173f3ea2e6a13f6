"""
Shared rich console and logger setup
"""

import logging

from rich.console import Console
from rich.logging import RichHandler

# Status output goes to stderr; stdout is reserved for command results
console = Console(stderr=True)

_ROOT = "fqt"
_configured = False


def configure_logging(level: str = "WARNING") -> None:
    """Attach a RichHandler to the package logger (idempotent)"""
    global _configured
    root = logging.getLogger(_ROOT)
    if not _configured:
        handler = RichHandler(console=console, show_path=False, rich_tracebacks=True)
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        root.addHandler(handler)
        root.propagate = False
        _configured = True
    root.setLevel(getattr(logging, level.upper(), logging.WARNING))


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(f"{_ROOT}.{name}")
