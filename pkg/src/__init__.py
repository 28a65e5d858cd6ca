"""Quantum duality checker for prime monotone boolean functions."""

from __future__ import annotations

from .logging_utils import setup_logging

__version__ = "0.1.0"

# Log to duality.log as soon as any module is imported
setup_logging()
