#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/settings.py
# Purpose: Environment-driven configuration (dotenv + pydantic settings).
#
# Description of code and how it works:
# - Loads .env once at import, like the DB bootstrap used to.
# - Settings reads QUARTICDE_* variables; CLI flags override per run.
# - get_settings() is cached; call get_settings.cache_clear() after
#   patching the environment.
#
# Env:
#   QUARTICDE_PAIR_BUDGET   (default: 20000000 index pairs)
#   QUARTICDE_THREADS       (default: 1)
#   QUARTICDE_SEGMENTS      (default: 8)
#   QUARTICDE_OUTPUT        (default: json)
#   QUARTICDE_LOG_LEVEL     (default: INFO)
#   QUARTICDE_LOG_DIR / QUARTICDE_LOG_FILE (file logging off when unset)
#   QUARTICDE_LOG_MAX_DIGITS (default: 60)
#   QUARTICDE_CATALOG_PATH  (default: packaged data/worked_examples.yml)
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.2.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.2.0 (2026-10-17): Search budgets and catalog path.
# - 0.1.0 (2026-10-17): Initial env loading.
###################################################################
#
from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseSettings, validator

load_dotenv()

PACKAGE_DIR = Path(__file__).resolve().parent
DEFAULT_CATALOG = PACKAGE_DIR / "data" / "worked_examples.yml"


class Settings(BaseSettings):
    pair_budget: int = 20_000_000
    threads: int = 1
    segments: int = 8
    output: str = "json"
    log_level: str = "INFO"
    log_dir: Optional[Path] = None
    log_file: Optional[Path] = None
    log_max_digits: int = 60
    catalog_path: Path = DEFAULT_CATALOG

    class Config:
        env_prefix = "QUARTICDE_"

    @validator("pair_budget", "threads", "segments", "log_max_digits")
    def _positive(cls, v):
        if v < 1:
            raise ValueError("must be >= 1")
        return v

    @validator("output")
    def _output_mode(cls, v):
        v = v.strip().lower()
        if v not in ("json", "table"):
            raise ValueError("output must be 'json' or 'table'")
        return v


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
