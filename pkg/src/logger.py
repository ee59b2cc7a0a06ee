# Builtin Imports
import sys
import logging

# Local Imports
from src.settings import get_settings




_CONFIGURED = False

def configure_logging(level: str = None) -> None:

    """Attaches one stderr handler to the 'formata' logger tree."""

    global _CONFIGURED
    root = logging.getLogger("formata")

    if not _CONFIGURED:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        root.addHandler(handler)
        root.propagate = False
        _CONFIGURED = True

    root.setLevel(level or get_settings().log_level)

def get_logger(name: str) -> logging.Logger:
    if not _CONFIGURED:
        configure_logging()
    return logging.getLogger(f"formata.{name}")
