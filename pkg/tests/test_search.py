#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: tests/test_search.py
# Purpose: Meet-in-the-middle search, survey and the nested-loop oracle
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
from fractions import Fraction

import pytest

from quarticde_app import search
from quarticde_app.errors import InvalidInput, ResourceRefused
from quarticde_app.models import canonical_form


def coords(hits):
    return [h.coords for h in hits]


def test_verify_never_raises():
    assert search.verify(206, 3923, 1084, 4747, 506)
    assert search.verify("4/3", 101, 158, 171, 88)
    assert not search.verify(206, 3923, 1084, 4747, 507)
    assert not search.verify("x", 1, 2, 3, 4)
    assert not search.verify("1/0", 1, 2, 3, 4)
    assert not search.verify(0.5, 1, 2, 3, 4)
    assert not search.verify(206, "a", 2, 3, 4)


def test_small_bound_for_h1_is_empty():
    assert search.mitm_search(1, 50) == []


def test_h1_smallest_solution():
    hits = search.mitm_search(1, 160)
    assert hits[0].coords == (158, 59, 134, 133)
    assert hits[0].height == 158


@pytest.mark.parametrize("h,first", [
    (3, (4, 1, 2, 3)),
    (5, (3, 0, 1, 2)),
    (17, (4, 1, 1, 2)),
])
def test_small_h_first_hits(h, first):
    assert search.mitm_search(h, 12)[0].coords == first


def test_fourth_power_h_hides_trivial_swaps():
    assert search.mitm_search(16, 30) == []


def test_rational_h():
    hits = search.mitm_search(Fraction(4, 3), 180)
    assert canonical_form(Fraction(4, 3), 101, 158, 171, 88) in coords(hits)


@pytest.mark.parametrize("h", range(1, 21))
def test_matches_oracle_small(h):
    assert search.mitm_search(h, 20) == search.naive_search(h, 20)


def test_engines_and_threads_agree():
    base = search.mitm_search(3, 40, engine="python", segments=1)
    assert search.mitm_search(3, 40, engine="numpy", segments=5) == base
    assert search.mitm_search(3, 40, segments=4, threads=2) == base


def test_budget_refusal():
    with pytest.raises(ResourceRefused) as exc:
        search.mitm_search(1, 100, pair_budget=10)
    assert "largest N within budget: 4" in str(exc.value)
    with pytest.raises(ResourceRefused):
        search.survey(1, 5, 100, pair_budget=10)


def test_max_bound():
    for budget in (1, 10, 5050, 20_000_000):
        n = search.max_bound(budget)
        assert search.pair_count(n) <= budget < search.pair_count(n + 1)


def test_input_errors():
    with pytest.raises(InvalidInput):
        search.mitm_search(0, 10)
    with pytest.raises(InvalidInput):
        search.mitm_search(-3, 10)
    with pytest.raises(InvalidInput):
        search.mitm_search(3, 1)
    with pytest.raises(InvalidInput):
        search.mitm_search(3, 10, engine="gpu")
    with pytest.raises(InvalidInput):
        search.choose_engine("numpy", 10 ** 12, 100)
    assert search.choose_engine("auto", 10 ** 12, 100) == "python"
    assert search.choose_engine("auto", 1, 100) == "numpy"


def test_survey_rows():
    rows = {r.h: r for r in search.survey(1, 20, 40)}
    assert sorted(rows) == list(range(1, 21))
    assert rows[3].smallest.coords == (4, 1, 2, 3)
    assert rows[5].smallest.coords == (3, 0, 1, 2)
    assert rows[17].smallest.coords == (4, 1, 1, 2)
    assert rows[18].smallest.coords == (33, 2, 9, 16)
    assert rows[1].smallest is None
    assert rows[1].hits == 0
    for h in (3, 5, 17, 18):
        assert rows[h].smallest == search.mitm_search(h, 40)[0]


@pytest.mark.slow
def test_h206_smallest_solution():
    hits = search.mitm_search(206, 5000)
    assert hits[0].coords == (4747, 506, 3923, 1084)


@pytest.mark.slow
def test_survey_single_h_large_bound():
    (row,) = search.survey(206, 206, 5000)
    assert row.smallest.coords == (4747, 506, 3923, 1084)
    (row,) = search.survey(2572, 2572, 5000)
    assert row.smallest is None
    assert row.hits == 0


@pytest.mark.slow
@pytest.mark.parametrize("h", range(1, 21))
def test_matches_oracle(h):
    for n in range(2, 61):
        assert search.mitm_search(h, n) == search.naive_search(h, n), n
