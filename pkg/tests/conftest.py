#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: tests/conftest.py
# Purpose: Shared fixtures: seeded rngs, settings isolation, golden points
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
import random
from fractions import Fraction

import pytest

from quarticde_app.settings import get_settings
from quarticde_app.weierstrass import Affine


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch):
    for var in ("QUARTICDE_PAIR_BUDGET", "QUARTICDE_THREADS", "QUARTICDE_SEGMENTS", "QUARTICDE_OUTPUT",
                "QUARTICDE_LOG_LEVEL", "QUARTICDE_LOG_DIR", "QUARTICDE_LOG_FILE", "QUARTICDE_CATALOG_PATH"):
        monkeypatch.delenv(var, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
    # cli.main() turns propagation off; let caplog see records again
    logging.getLogger("quarticde").propagate = True


@pytest.fixture
def rng():
    return random.Random(20260417)


def random_rational(rng: random.Random, span: int = 50, den: int = 20) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


@pytest.fixture
def e16_gen():
    return Affine(Fraction(340), Fraction(680))


@pytest.fixture
def e103_8_gen():
    return Affine(Fraction(2131205, 32), Fraction(8767168835, 512))
