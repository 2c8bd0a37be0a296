#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/schemas.py
# Purpose: Pydantic models (v1) for the JSON-lines records the CLI emits.
#
# Description of code and how it works:
# - Every integer and rational is a decimal string ("v/u" for rationals);
#   39-digit coordinates are routine.
# - orm_mode lets records be built straight from the domain dataclasses.
# - Field names are stable: h, A, B, C, D, provenance, twist_t, z, multiple_index.
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.2.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.2.0 (2026-10-17): Sweep, family and conjecture records.
# - 0.1.0 (2026-10-17): Quadruple / search records.
###################################################################
#
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, validator

from .models import Quadruple, Source


def _text(v: Any) -> Any:
    if v is None or isinstance(v, str):
        return v
    return str(v)


class Record(BaseModel):
    kind: str

    class Config:
        orm_mode = True


class QuadrupleBase(Record):
    h: str
    A: str
    B: str
    C: str
    D: str

    _as_text = validator("h", "A", "B", "C", "D", pre=True, allow_reuse=True)(_text)


class QuadrupleOut(QuadrupleBase):
    kind: str = "quadruple"
    provenance: str
    twist_t: Optional[str]
    chain: List[str] = []
    z: Optional[str]
    multiple_index: Optional[int]

    @classmethod
    def from_quadruple(cls, q: Quadruple) -> "QuadrupleOut":
        details = q.provenance.details
        multiple = details.get("multiple")
        return cls(
            h=q.h,
            A=q.A,
            B=q.B,
            C=q.C,
            D=q.D,
            provenance=q.provenance.tag(),
            twist_t=_text(q.provenance.twist_t),
            chain=list(q.provenance.chain),
            z=details.get("z"),
            multiple_index=int(multiple) if multiple is not None else None,
        )


class HValueOut(Record):
    kind: str = "h-value"
    h: str
    Y: str
    z: str
    multiple_index: int
    point: str

    _as_text = validator("h", "Y", "z", "point", pre=True, allow_reuse=True)(_text)


class SearchHitOut(QuadrupleBase):
    kind: str = "search-hit"
    provenance: str = Source.SEARCH.value


class SurveyRowOut(Record):
    kind: str = "survey-row"
    provenance: str = Source.SEARCH.value
    h: str
    found: bool
    A: Optional[str]
    B: Optional[str]
    C: Optional[str]
    D: Optional[str]
    hits: int

    _as_text = validator("h", "A", "B", "C", "D", pre=True, allow_reuse=True)(_text)


class TwistScanOut(Record):
    kind: str = "twist-scan"
    h: str
    exhausted: bool
    t: Optional[str]
    twisted_h: Optional[str]
    points: List[str] = []
    general_points: List[str] = []
    searched: List[str] = []
    skipped_singular: List[str] = []


class Conjecture2MatchOut(BaseModel):
    z: str
    multiple_index: int
    h: str
    t: str

    _as_text = validator("z", "h", "t", pre=True, allow_reuse=True)(_text)

    class Config:
        orm_mode = True


class Conjecture2Out(Record):
    kind: str = "conjecture2"
    n: str
    miss: bool
    h_checked: int
    skipped: int
    matches: List[Conjecture2MatchOut] = []

    _as_text = validator("n", pre=True, allow_reuse=True)(_text)


class FamilyOut(Record):
    kind: str = "family"
    name: str
    arity: int
    params: List[str]
    h_degree: int
    note: str
    valid: bool
    samples: int
    failures: int
    correction: Optional[str]


class VerifyOut(QuadrupleBase):
    kind: str = "verify"
    valid: bool


class SweepEntryOut(Record):
    kind: str = "sweep"
    name: str
    check: str
    status: str
    h: Optional[str]
    printed: Optional[List[str]]
    recomputed: Optional[List[str]]
    detail: Optional[str]


class RunConfig(BaseModel):
    """One CLI invocation after settings and flags are merged."""
    command: str
    output: str = "json"
    pair_budget: int
    threads: int
    segments: int
    log_level: str = "INFO"
    args: Dict[str, Any] = {}

    @validator("output")
    def _output(cls, v):
        if v not in ("json", "table"):
            raise ValueError("output must be 'json' or 'table'")
        return v

    @validator("pair_budget", "threads", "segments")
    def _positive(cls, v):
        if v < 1:
            raise ValueError("must be >= 1")
        return v
