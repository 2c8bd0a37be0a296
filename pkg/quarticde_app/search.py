#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/search.py
# Purpose: Bounded exhaustive search for A^4 + h B^4 = C^4 + h D^4.
#
# Description of code and how it works:
# - Meet in the middle on u (A^4 - C^4) = v (D^4 - B^4), h = v/u:
#   index every u (A^4 - C^4) with N >= A > C >= 0, probe with v (D^4 - B^4).
# - The index is split into K segments by key % K; only one segment's index
#   is alive at a time. Segments run in a process pool when threads > 1.
# - numpy int64 fast path while max(u, v) N^4 fits in 63 bits, otherwise a
#   dict of Python ints. Every candidate is re-verified with exact integers.
# - Hits are reduced by gcd, mapped to their canonical form, deduplicated and
#   sorted by (max coordinate, coordinates).
# - survey() keeps one segment index and probes it for every h in a range.
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.3.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.3.0 (2026-10-17): survey over h ranges reusing segment indexes.
# - 0.2.0 (2026-10-17): Process pool over segments; numpy engine.
# - 0.1.0 (2026-10-17): Dict-based meet in the middle + naive oracle.
###################################################################
#
from __future__ import annotations

import logging
import math
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from .errors import InvalidInput, QuarticDEError, ResourceRefused, VerificationFailure
from .exactnum import RationalLike, as_rational, exact_root4, gcd_all
from .models import canonical_form, equation_holds, is_trivial
from .settings import get_settings

log = logging.getLogger("quarticde")

Raw = Tuple[int, int, int, int]

ENGINES = ("auto", "numpy", "python")
_INT64_LIMIT = 2 ** 63


def verify(h: RationalLike, A: int, B: int, C: int, D: int) -> bool:
    """Exact truth of u A^4 + v B^4 = u C^4 + v D^4 for h = v/u."""
    try:
        return equation_holds(as_rational(h), int(A), int(B), int(C), int(D))
    except (QuarticDEError, ValueError, TypeError, ZeroDivisionError):
        return False


@dataclass(frozen=True, order=True)
class SearchHit:
    h: Fraction
    A: int
    B: int
    C: int
    D: int

    @property
    def coords(self) -> Raw:
        return (self.A, self.B, self.C, self.D)

    @property
    def height(self) -> int:
        return max(self.coords)


def pair_count(n: int) -> int:
    return n * (n + 1) // 2


def _check_budget(n: int, pair_budget: int) -> None:
    pairs = pair_count(n)
    if pairs > pair_budget:
        raise ResourceRefused(
            f"bound N={n} needs {pairs} index pairs, over the budget of {pair_budget} "
            f"(largest N within budget: {max_bound(pair_budget)}; raise QUARTICDE_PAIR_BUDGET or lower N)"
        )


def choose_engine(engine: str, scale: int, n: int) -> str:
    if engine not in ENGINES:
        raise InvalidInput(f"engine must be one of {', '.join(ENGINES)}")
    fits = scale * n ** 4 < _INT64_LIMIT
    if engine == "numpy" and not fits:
        raise InvalidInput(f"numpy engine would overflow int64 at scale={scale}, N={n}")
    if engine == "auto":
        return "numpy" if fits else "python"
    return engine


# --------- Segment index ------------------------------------------------------

class _NumpyIndex:
    def __init__(self, n: int, scale: int, segments: int, segment: int):
        self.p4 = np.arange(n + 1, dtype=np.int64) ** 4
        keys, his, los = [], [], []
        for hi in range(1, n + 1):
            diff = scale * (self.p4[hi] - self.p4[:hi])
            mask = diff % segments == segment
            lo = np.nonzero(mask)[0]
            if lo.size:
                keys.append(diff[lo])
                his.append(np.full(lo.size, hi, dtype=np.int64))
                los.append(lo.astype(np.int64))
        if keys:
            k = np.concatenate(keys)
            order = np.argsort(k, kind="stable")
            self.keys = k[order]
            self.his = np.concatenate(his)[order]
            self.los = np.concatenate(los)[order]
        else:
            self.keys = self.his = self.los = np.empty(0, dtype=np.int64)

    def __len__(self) -> int:
        return int(self.keys.size)

    def probe(self, n: int, scale: int, segments: int, segment: int) -> Iterator[Raw]:
        """Yield raw (A, B, C, D) where index key == scale (D^4 - B^4)."""
        if not len(self):
            return
        for d in range(1, n + 1):
            diff = scale * (self.p4[d] - self.p4[:d])
            bs = np.nonzero(diff % segments == segment)[0]
            if not bs.size:
                continue
            probes = diff[bs]
            left = np.searchsorted(self.keys, probes, side="left")
            right = np.searchsorted(self.keys, probes, side="right")
            for j in np.nonzero(right > left)[0]:
                b = int(bs[j])
                for i in range(int(left[j]), int(right[j])):
                    yield (int(self.his[i]), b, int(self.los[i]), d)


class _DictIndex:
    def __init__(self, n: int, scale: int, segments: int, segment: int):
        self.p4 = [x ** 4 for x in range(n + 1)]
        index: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
        for a in range(1, n + 1):
            pa = self.p4[a]
            for c in range(a):
                key = scale * (pa - self.p4[c])
                if key % segments == segment:
                    index[key].append((a, c))
        self.index = index

    def __len__(self) -> int:
        return sum(len(v) for v in self.index.values())

    def probe(self, n: int, scale: int, segments: int, segment: int) -> Iterator[Raw]:
        if not self.index:
            return
        for d in range(1, n + 1):
            pd = self.p4[d]
            for b in range(d):
                key = scale * (pd - self.p4[b])
                if key % segments != segment:
                    continue
                for a, c in self.index.get(key, ()):
                    yield (a, b, c, d)


def _build_index(engine: str, n: int, scale: int, segments: int, segment: int):
    if engine == "numpy":
        return _NumpyIndex(n, scale, segments, segment)
    return _DictIndex(n, scale, segments, segment)


# --------- Hit handling -------------------------------------------------------

def _accept(h: Fraction, raw: Raw) -> Optional[Raw]:
    """Exact re-check; canonical primitive form, or None for a trivial identity."""
    if not equation_holds(h, *raw):
        raise VerificationFailure(f"index match {raw} fails the equation for h={h}")
    if is_trivial(h, *raw):
        return None
    g = gcd_all(raw)
    prim = tuple(x // g for x in raw)
    return canonical_form(h, *prim)


def _sorted_hits(h: Fraction, found: Iterable[Raw]) -> List[SearchHit]:
    hits = [SearchHit(h, *c) for c in set(found)]
    hits.sort(key=lambda s: (s.height, s.coords))
    return hits


@dataclass(frozen=True)
class _SegmentTask:
    h: Fraction
    n: int
    segments: int
    segment: int
    engine: str


def _search_segment(task: _SegmentTask) -> Tuple[Set[Raw], int]:
    u, v = task.h.denominator, task.h.numerator
    index = _build_index(task.engine, task.n, u, task.segments, task.segment)
    found: Set[Raw] = set()
    for raw in index.probe(task.n, v, task.segments, task.segment):
        c = _accept(task.h, raw)
        if c is not None:
            found.add(c)
    return found, len(index)


def _resolve(segments: Optional[int], threads: Optional[int], pair_budget: Optional[int]):
    settings = get_settings()
    segments = settings.segments if segments is None else segments
    threads = settings.threads if threads is None else threads
    pair_budget = settings.pair_budget if pair_budget is None else pair_budget
    if segments < 1 or threads < 1:
        raise InvalidInput("segments and threads must be >= 1")
    return segments, threads, pair_budget


def _run_tasks(func, tasks: Sequence, threads: int) -> List:
    if threads == 1 or len(tasks) == 1:
        return [func(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(threads, len(tasks))) as pool:
        return list(pool.map(func, tasks))


def mitm_search(
    h: RationalLike,
    n: int,
    segments: Optional[int] = None,
    threads: Optional[int] = None,
    engine: str = "auto",
    pair_budget: Optional[int] = None,
) -> List[SearchHit]:
    """All canonical nontrivial solutions with coordinates <= n."""
    h = as_rational(h)
    if h <= 0:
        raise InvalidInput("search needs h > 0")
    if n < 2:
        raise InvalidInput("search bound N must be >= 2")
    segments, threads, pair_budget = _resolve(segments, threads, pair_budget)
    _check_budget(n, pair_budget)
    engine = choose_engine(engine, max(h.numerator, h.denominator), n)

    started = time.perf_counter()
    tasks = [_SegmentTask(h, n, segments, s, engine) for s in range(segments)]
    found: Set[Raw] = set()
    indexed = 0
    for seg_found, seg_size in _run_tasks(_search_segment, tasks, threads):
        found |= seg_found
        indexed += seg_size
    hits = _sorted_hits(h, found)
    log.info(
        "[SEARCH] h=%s N=%d engine=%s segments=%d threads=%d indexed=%d hits=%d in %.2fs",
        h, n, engine, segments, threads, indexed, len(hits), time.perf_counter() - started,
    )
    return hits


# --------- Survey -------------------------------------------------------------

@dataclass(frozen=True)
class SurveyRow:
    h: int
    smallest: Optional[SearchHit]
    hits: int


@dataclass(frozen=True)
class _SurveyTask:
    hs: Tuple[int, ...]
    n: int
    segments: int
    segment: int
    engine: str


def _survey_segment(task: _SurveyTask) -> Dict[int, Set[Raw]]:
    index = _build_index(task.engine, task.n, 1, task.segments, task.segment)
    out: Dict[int, Set[Raw]] = {}
    for h in task.hs:
        hq = Fraction(h)
        found: Set[Raw] = set()
        for raw in index.probe(task.n, h, task.segments, task.segment):
            c = _accept(hq, raw)
            if c is not None:
                found.add(c)
        out[h] = found
    return out


def survey(
    h_lo: int,
    h_hi: int,
    n: int,
    segments: Optional[int] = None,
    threads: Optional[int] = None,
    engine: str = "auto",
    pair_budget: Optional[int] = None,
) -> List[SurveyRow]:
    """Smallest solution (by max coordinate) for every integer h in [h_lo, h_hi]."""
    if h_lo < 1 or h_hi < h_lo:
        raise InvalidInput("survey needs 1 <= h_lo <= h_hi")
    if n < 2:
        raise InvalidInput("search bound N must be >= 2")
    segments, threads, pair_budget = _resolve(segments, threads, pair_budget)
    _check_budget(n, pair_budget)
    engine = choose_engine(engine, h_hi, n)

    hs = tuple(range(h_lo, h_hi + 1))
    tasks = [_SurveyTask(hs, n, segments, s, engine) for s in range(segments)]
    merged: Dict[int, Set[Raw]] = {h: set() for h in hs}
    for part in _run_tasks(_survey_segment, tasks, threads):
        for h, found in part.items():
            merged[h] |= found
    rows = []
    for h in hs:
        hits = _sorted_hits(Fraction(h), merged[h])
        rows.append(SurveyRow(h=h, smallest=hits[0] if hits else None, hits=len(hits)))
    solved = sum(1 for r in rows if r.smallest is not None)
    log.info("[SEARCH] survey h=%d..%d N=%d solved=%d/%d", h_lo, h_hi, n, solved, len(rows))
    return rows


# --------- Oracle -------------------------------------------------------------

def naive_search(h: RationalLike, n: int) -> List[SearchHit]:
    """Loop over (A, B, C) and take D from an exact fourth root; no hashing."""
    h = as_rational(h)
    u, v = h.denominator, h.numerator
    p4 = [x ** 4 for x in range(n + 1)]
    found: Set[Raw] = set()
    for a in range(n + 1):
        for b in range(n + 1):
            left = u * p4[a] + v * p4[b]
            for c in range(n + 1):
                rest = left - u * p4[c]
                if rest < 0 or rest % v:
                    continue
                d4 = rest // v
                root = exact_root4(d4)
                if root is None or root > n:
                    continue
                raw = (a, b, c, int(root))
                if raw == (0, 0, 0, 0) or is_trivial(h, *raw):
                    continue
                g = gcd_all(raw)
                found.add(canonical_form(h, *(x // g for x in raw)))
    return _sorted_hits(h, found)


def max_bound(pair_budget: int) -> int:
    """Largest N whose index fits in the given pair budget."""
    n = math.isqrt(2 * pair_budget)
    while pair_count(n) > pair_budget:
        n -= 1
    return n
