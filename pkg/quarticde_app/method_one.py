#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/method_one.py
# Purpose: First elliptic-curve method for A^4 + h B^4 = C^4 + h D^4.
#
# Description of code and how it works:
# - E(h): Y^2 = X^3 - 3h^2 X^2 + 3h(h^3-h) X - (h^3-h)^2, from
#   A=m-q, B=m+p, C=m+q, D=m-p with the branch h p - q = 1.
# - A point (X, Y) gives p = X/(h^3-h), m = Y/(h^3-h), q = h p - 1,
#   then the four rationals are normalized into a primitive Quadruple.
# - Twists h -> h t^4 and the symmetries h -> 1/h, h -> -h move solutions
#   between parameters; retarget() chains them to reach a printed h.
# - Scaled model (a2 = -3/h^2): X' = (X+1-h^2)/h^2, Y' = Y/h^3.
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.4.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.4.0 (2026-10-17): retarget / invert_h / negate_h chains.
# - 0.3.0 (2026-10-17): twist_scan over candidate t with naive search.
# - 0.2.0 (2026-10-17): descale_twist + integerize.
# - 0.1.0 (2026-10-17): Curve builders and point -> quadruple pipeline.
###################################################################
#
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import DegeneratePoint, DomainError, InvalidInput, SingularCurve, VerificationFailure
from .exactnum import RationalLike, as_rational, exact_root4
from .models import Provenance, Quadruple, Source, equation_holds, normalize_quadruple
from .weierstrass import (
    INFINITY,
    Affine,
    CurveW,
    PointQ,
    contains,
    multiples,
    naive_point_search,
    point_on,
    shift_x,
)

log = logging.getLogger("quarticde")

_SINGULAR_H = (Fraction(0), Fraction(1), Fraction(-1))


def _check_h(h: Fraction) -> Fraction:
    h = as_rational(h)
    if h in _SINGULAR_H:
        raise SingularCurve(f"h={h} gives a singular curve (h^3 - h = 0)")
    return h


@dataclass(frozen=True)
class MPQTriple:
    m: Fraction
    p: Fraction
    q: Fraction

    def satisfies(self, h: RationalLike) -> bool:
        h = as_rational(h)
        return (
            h * self.p - self.q == 1
            and self.m * self.m * (h * self.p - self.q) == -h * self.p ** 3 + self.q ** 3
        )


# --------- Curves -------------------------------------------------------------

def build_curve(h: RationalLike) -> CurveW:
    h = _check_h(h)
    k = h ** 3 - h
    return CurveW(a2=-3 * h * h, a4=3 * h * k, a6=-k * k)


def build_depressed(h: RationalLike) -> CurveW:
    h = _check_h(h)
    return CurveW(a2=Fraction(0), a4=-3 * h * h, a6=-(h ** 4 + h * h))


def build_twist(h: RationalLike, t: RationalLike) -> CurveW:
    h, t = as_rational(h), as_rational(t)
    return build_depressed(h * t ** 4)


def build_remark4_curve(h: RationalLike) -> CurveW:
    h = _check_h(h)
    h2 = h * h
    k = h2 - 1
    return CurveW(a2=-3 / h2, a4=-3 * k / (h2 * h2), a6=-(k / (h2 * h)) ** 2)


def remark4_map(h: RationalLike, P: PointQ) -> PointQ:
    """Point on the scaled model -> point on build_curve(h)."""
    h = _check_h(h)
    if P is INFINITY:
        return P
    h2 = h * h
    return Affine(h2 * P.x - 1 + h2, h ** 3 * P.y)


def to_remark4(h: RationalLike, P: PointQ) -> PointQ:
    """Point on build_curve(h) -> point on the scaled model."""
    h = _check_h(h)
    if P is INFINITY:
        return P
    h2 = h * h
    return Affine((P.x + 1 - h2) / h2, P.y / h ** 3)


# --------- Point -> triple -> quadruple ---------------------------------------

def point_to_mpq(h: RationalLike, P: PointQ) -> MPQTriple:
    h = _check_h(h)
    if P is INFINITY:
        raise DegeneratePoint("the point at infinity gives no (m, p, q)")
    k = h ** 3 - h
    p = P.x / k
    m = P.y / k
    return MPQTriple(m=m, p=p, q=h * p - 1)


def mpq_to_quadruple(
    h: RationalLike,
    triple: MPQTriple,
    provenance: Optional[Provenance] = None,
) -> Optional[Quadruple]:
    """Quadruple from A=m-q, B=m+p, C=m+q, D=m-p; None when trivial (incl. m = 0)."""
    h = as_rational(h)
    if triple.m == 0:
        return None
    values = (triple.m - triple.q, triple.m + triple.p, triple.m + triple.q, triple.m - triple.p)
    return normalize_quadruple(h, values, provenance or Provenance(Source.METHOD_ONE))


def _rescaled(
    s: Quadruple,
    new_h: Fraction,
    values: Sequence[Fraction],
    step: str,
    twist_t: Optional[Fraction] = None,
) -> Quadruple:
    out = normalize_quadruple(new_h, values, s.provenance.then(step, twist_t))
    if out is None:
        raise VerificationFailure(f"{s} became trivial under {step}")
    return out


def descale_twist(s: Quadruple, t: RationalLike) -> Quadruple:
    """Solution for h*t^4 -> solution for h, via (A, tB, C, tD)."""
    t = as_rational(t)
    if t == 0:
        raise DomainError("twist factor t must be nonzero")
    if t == 1:
        return s
    new_h = s.h / t ** 4
    values = (Fraction(s.A), t * s.B, Fraction(s.C), t * s.D)
    return _rescaled(s, new_h, values, f"descale t={t}", twist_t=t)


def integerize(s: Quadruple) -> Quadruple:
    """h = v/u -> v*u^3, scaling A and C by u."""
    u = s.h.denominator
    if u == 1:
        return s
    out = descale_twist(s, Fraction(1, u))
    log.debug("[METHOD1] integerize h=%s -> %s", s.h, out.h)
    return out


def invert_h(s: Quadruple) -> Quadruple:
    if s.h == 0:
        raise DomainError("h = 0 has no reciprocal")
    return _rescaled(s, 1 / s.h, (s.B, s.A, s.D, s.C), "invert")


def negate_h(s: Quadruple) -> Quadruple:
    return _rescaled(s, -s.h, (s.A, s.D, s.C, s.B), "negate")


def retarget(s: Quadruple, target: RationalLike) -> Quadruple:
    """Move s to the parameter target = h' * t^4, h' in {h, 1/h, -h, -1/h}."""
    target = as_rational(target)
    if target == s.h:
        return s
    if target == 0:
        raise DomainError("cannot retarget to h = 0")
    chains = (
        (),
        (invert_h,),
        (negate_h,),
        (invert_h, negate_h),
    )
    for chain in chains:
        moved = s
        for step in chain:
            moved = step(moved)
        ratio = target / moved.h
        t = exact_root4(ratio) if ratio > 0 else None
        if t is None:
            continue
        # solution for h' is one for h' * t^4 after descaling by 1/t
        return descale_twist(moved, 1 / t)
    raise DomainError(f"{target} is not h * t^4 for h in {{±{s.h}, ±1/({s.h})}}")


# --------- Pipelines ----------------------------------------------------------

def solve(h: RationalLike, gen: PointQ, n_max: int) -> List[Quadruple]:
    """Quadruples from gen, 2 gen, ..., n_max gen in multiple order."""
    h = _check_h(h)
    if n_max < 1:
        raise InvalidInput("n_max must be >= 1")
    curve = build_curve(h)
    if gen is INFINITY or not contains(curve, gen):
        raise InvalidInput(f"generator {gen} is not an affine point on {curve}")
    out: List[Quadruple] = []
    trivial = 0
    for n, P in enumerate(multiples(curve, gen, n_max), start=1):
        if P is INFINITY or P.y == 0:
            trivial += 1
            continue
        triple = point_to_mpq(h, P)
        quad = mpq_to_quadruple(h, triple, Provenance.of(Source.METHOD_ONE, multiple=n))
        if quad is None:
            trivial += 1
            continue
        if not equation_holds(quad.h, *quad.coords):
            raise VerificationFailure(f"solve produced an invalid {quad}")
        out.append(quad)
    log.info("[METHOD1] solve h=%s multiples=%d solutions=%d trivial=%d", h, n_max, len(out), trivial)
    return out


@dataclass(frozen=True)
class TwistHit:
    t: Fraction
    twisted_h: Fraction
    points: Tuple[Affine, ...]
    general_points: Tuple[Affine, ...]


@dataclass(frozen=True)
class TwistScanReport:
    h: Fraction
    searched: Tuple[Fraction, ...] = ()
    skipped_singular: Tuple[Fraction, ...] = ()
    hit: Optional[TwistHit] = None

    @property
    def exhausted(self) -> bool:
        return self.hit is None


def twist_scan(h: RationalLike, t_candidates: Sequence[RationalLike], height_bound: int) -> TwistScanReport:
    """First t (in the given order) whose twist E(h t^4) shows a point within the bound."""
    h = as_rational(h)
    searched: List[Fraction] = []
    skipped: List[Fraction] = []
    for t in (as_rational(x) for x in t_candidates):
        ht = h * t ** 4
        try:
            curve = build_depressed(ht)
        except SingularCurve:
            skipped.append(t)
            continue
        searched.append(t)
        points = [p for p in naive_point_search(curve, height_bound) if p.y != 0]
        log.debug("[METHOD1] twist t=%s h*t^4=%s points=%d", t, ht, len(points))
        if points:
            general = shift_x(build_curve(ht), ht * ht)
            hit = TwistHit(
                t=t,
                twisted_h=ht,
                points=tuple(points),
                general_points=tuple(general.backward(p) for p in points),
            )
            log.info("[METHOD1] twist scan h=%s hit t=%s points=%d", h, t, len(points))
            return TwistScanReport(h=h, searched=tuple(searched), skipped_singular=tuple(skipped), hit=hit)
    log.info("[METHOD1] twist scan h=%s exhausted candidates=%d", h, len(searched))
    return TwistScanReport(h=h, searched=tuple(searched), skipped_singular=tuple(skipped))


def load_generator(h: RationalLike, x: RationalLike, y: RationalLike) -> Affine:
    """Validate a generator against build_curve(h)."""
    return point_on(build_curve(h), x, y)
