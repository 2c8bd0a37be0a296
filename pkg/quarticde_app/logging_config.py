#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/logging_config.py
# Purpose: Centralized logging setup (console + optional rotating file, digit abbreviation)
#
# Description of code and how it works:
# - Console handler writes to stderr; stdout carries JSON-lines records only.
# - TimedRotatingFileHandler (daily) when QUARTICDE_LOG_DIR/QUARTICDE_LOG_FILE is set.
# - Abbreviates very long integers (39+ digit solutions are routine) in log
#   records so a single line stays readable.
# - Safe to call repeatedly: handlers are attached once.
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 1.1.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 1.1.0 (2026-10-17): Digit abbreviation filter replaces API-key redaction.
# - 1.0.0 (2026-10-17): Initial logging bundle.
###################################################################
#
from __future__ import annotations

import logging
import re
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path
from typing import Optional

from .settings import get_settings

LOGGER_NAME = "quarticde"

_DIGITS_RE = re.compile(r"-?\d{12,}")


def _ensure_dir(p: Path) -> None:
    p.mkdir(parents=True, exist_ok=True)


def abbreviate_digits(text: str, max_digits: int) -> str:
    def _short(m: re.Match) -> str:
        s = m.group(0)
        digits = s.lstrip("-")
        if len(digits) <= max_digits:
            return s
        sign = "-" if s.startswith("-") else ""
        return f"{sign}{digits[:6]}…{digits[-6:]} ({len(digits)} digits)"

    return _DIGITS_RE.sub(_short, text)


class _AbbreviateFilter(logging.Filter):
    def __init__(self, max_digits: int):
        super().__init__()
        self.max_digits = max_digits

    def filter(self, record: logging.LogRecord) -> bool:
        try:
            msg = record.getMessage()
        except Exception:
            return True
        short = abbreviate_digits(msg, self.max_digits)
        if short != msg:
            record.msg = short
            record.args = None
        return True


def setup_logging(level_name: Optional[str] = None) -> logging.Logger:
    settings = get_settings()
    level_name = (level_name or settings.log_level or "INFO").upper()
    level = getattr(logging, level_name, logging.INFO)

    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)
    logger.propagate = False  # don't double-log to root

    if getattr(logger, "_quarticde_configured", False):
        for h in logger.handlers:
            h.setLevel(level)
        return logger

    fmt = logging.Formatter(
        fmt="%(asctime)s %(levelname)s [%(name)s] %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S%z",
    )
    abbreviate = _AbbreviateFilter(settings.log_max_digits)

    # Console handler (stderr)
    ch = logging.StreamHandler()
    ch.setLevel(level)
    ch.setFormatter(fmt)
    ch.addFilter(abbreviate)
    logger.addHandler(ch)

    # File handler: rotate at midnight, keep 7 days
    log_file = settings.log_file
    if log_file is None and settings.log_dir is not None:
        log_file = settings.log_dir / "quarticde_app.log"
    if log_file is not None:
        _ensure_dir(Path(log_file).parent)
        fh = TimedRotatingFileHandler(str(log_file), when="midnight", backupCount=7, encoding="utf-8")
        fh.setLevel(level)
        fh.setFormatter(fmt)
        fh.addFilter(abbreviate)
        logger.addHandler(fh)

    logger._quarticde_configured = True  # type: ignore[attr-defined]
    logger.debug("Logging initialized at %s (file=%s)", level_name, log_file)
    return logger
