#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: tests/test_settings_logging.py
# Purpose: Environment settings and logger setup
#
# Description of code and how it works:
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.1.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.1.0 (2026-10-17): Initial tests.
###################################################################
#
import logging
from logging.handlers import TimedRotatingFileHandler

import pytest
from pydantic import ValidationError

from quarticde_app.logging_config import LOGGER_NAME, abbreviate_digits, setup_logging
from quarticde_app.settings import DEFAULT_CATALOG, get_settings


@pytest.fixture
def fresh_logger():
    logger = logging.getLogger(LOGGER_NAME)
    saved = list(logger.handlers)
    for h in saved:
        logger.removeHandler(h)
    if hasattr(logger, "_quarticde_configured"):
        delattr(logger, "_quarticde_configured")
    yield logger
    for h in list(logger.handlers):
        h.close()
        logger.removeHandler(h)
    for h in saved:
        logger.addHandler(h)
    logger._quarticde_configured = bool(saved)


def test_defaults():
    s = get_settings()
    assert (s.pair_budget, s.threads, s.segments, s.output, s.log_level) == (20_000_000, 1, 8, "json", "INFO")
    assert s.catalog_path == DEFAULT_CATALOG
    assert DEFAULT_CATALOG.exists()


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("QUARTICDE_PAIR_BUDGET", "5000")
    monkeypatch.setenv("QUARTICDE_OUTPUT", " TABLE ")
    get_settings.cache_clear()
    s = get_settings()
    assert s.pair_budget == 5000
    assert s.output == "table"


@pytest.mark.parametrize("var,value", [
    ("QUARTICDE_THREADS", "0"),
    ("QUARTICDE_OUTPUT", "xml"),
])
def test_env_validation(monkeypatch, var, value):
    monkeypatch.setenv(var, value)
    get_settings.cache_clear()
    with pytest.raises(ValidationError):
        get_settings()


def test_abbreviate_digits():
    big = "1234567890" * 7
    assert abbreviate_digits(f"A={big}", 60) == "A=123456…567890 (70 digits)"
    assert abbreviate_digits(f"A=-{big}", 60) == "A=-123456…567890 (70 digits)"
    assert abbreviate_digits("A=123456789012345", 60) == "A=123456789012345"


def test_setup_logging_is_idempotent(fresh_logger):
    logger = setup_logging("debug")
    assert logger.level == logging.DEBUG
    assert logger.propagate is False
    count = len(logger.handlers)
    setup_logging("warning")
    assert len(logger.handlers) == count
    assert all(h.level == logging.WARNING for h in logger.handlers)


def test_file_logging_abbreviates(fresh_logger, tmp_path, monkeypatch):
    log_file = tmp_path / "logs" / "run.log"
    monkeypatch.setenv("QUARTICDE_LOG_FILE", str(log_file))
    monkeypatch.setenv("QUARTICDE_LOG_MAX_DIGITS", "20")
    get_settings.cache_clear()
    logger = setup_logging("INFO")
    assert any(isinstance(h, TimedRotatingFileHandler) for h in logger.handlers)
    logger.info("[TEST] coordinate %d", 10 ** 30)
    for h in logger.handlers:
        h.flush()
    text = log_file.read_text(encoding="utf-8")
    assert "[TEST] coordinate 100000…000000 (31 digits)" in text
