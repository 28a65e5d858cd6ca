"""Logging configuration helpers for the duality checker."""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Optional


LOG_FILE = Path(
    os.getenv("DUALITY_LOG_FILE", Path(__file__).resolve().parent.parent / "duality.log")
)


def setup_logging(level: Optional[str] = None) -> None:
    """Send package logs to :data:`LOG_FILE`.

    ``level`` overrides ``DUALITY_LOG_LEVEL``; measurement outcomes and
    per-step decisions are logged at ``DEBUG``.
    """

    level = level or os.getenv("DUALITY_LOG_LEVEL", "INFO")
    logging.basicConfig(
        level=level.upper(),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        handlers=[logging.FileHandler(LOG_FILE, encoding="utf-8")],
    )
