#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: tests/test_schemas.py
# Purpose: Output records and RunConfig validation
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
import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from quarticde_app.method_one import descale_twist
from quarticde_app.models import Provenance, Quadruple, Source
from quarticde_app.schemas import QuadrupleOut, RunConfig, SearchHitOut, SurveyRowOut, VerifyOut
from quarticde_app.search import SearchHit


def test_quadruple_record_fields():
    q = Quadruple(Fraction(16), 1203, 38, 653, 588, Provenance.of(Source.METHOD_ONE, multiple=2))
    rec = QuadrupleOut.from_quadruple(descale_twist(q, 2))
    data = json.loads(rec.json())
    assert data["kind"] == "quadruple"
    assert (data["h"], data["A"], data["B"], data["C"], data["D"]) == ("1", "1203", "76", "653", "1176")
    assert data["provenance"] == "method-one:multiple=2"
    assert data["twist_t"] == "2"
    assert data["chain"] == ["descale t=2"]
    assert data["multiple_index"] == 2
    assert data["z"] is None


def test_big_coordinates_stay_exact():
    hit = SearchHit(Fraction(2459), 2226087479458719030508635008690035436036778215959, 1, 2, 3)
    rec = SearchHitOut.from_orm(hit)
    assert rec.A == "2226087479458719030508635008690035436036778215959"
    assert rec.h == "2459"


def test_search_records_carry_search_provenance():
    hit = SearchHit(Fraction(206), 4747, 506, 3923, 1084)
    assert json.loads(SearchHitOut.from_orm(hit).json())["provenance"] == "search"
    row = SurveyRowOut(h=Fraction(5), found=False, hits=0, A=None, B=None, C=None, D=None)
    assert row.provenance == "search"


def test_verify_record():
    rec = VerifyOut(h=Fraction(206), A=3923, B=1084, C=4747, D=506, valid=True)
    assert json.loads(rec.json())["valid"] is True


def test_run_config_validation():
    cfg = RunConfig(command="search", pair_budget=10, threads=1, segments=2)
    assert cfg.output == "json"
    with pytest.raises(ValidationError):
        RunConfig(command="search", output="xml", pair_budget=10, threads=1, segments=2)
    with pytest.raises(ValidationError):
        RunConfig(command="search", pair_budget=0, threads=1, segments=2)
