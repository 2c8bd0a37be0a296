#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/method_two.py
# Purpose: Second method: h-values H(Z) from the cubic E'(Z) and their quadruples.
#
# Description of code and how it works:
# - For fixed Z the relation Y^2 = -h^4 - (3Z^2+1)h^2 + Z^6 is a quartic in h
#   with the rational point (h, Y) = (0, Z^3); it is birational to
#   E'(Z): Y'^2 = X'^3 - (3Z^2+1)X'^2 + 4Z^6 X' - (12Z^8 + 4Z^6).
# - A point (X', Y') gives h = 2Z^3 (X' - (3Z^2+1)) / Y' and
#   Y = -Z^3 + h^2 X' / (2Z^3); then (Z^2 + h^2, Y) lies on E(h) and the
#   method-one tail produces the quadruple.
# - conjecture2_scan() checks whether n = t^4 h for an enumerated h.
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.3.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.3.0 (2026-10-17): conjecture2_scan with skipped-multiple counters.
# - 0.2.0 (2026-10-17): h_to_quadruple via the method-one tail.
# - 0.1.0 (2026-10-17): E'(Z) and the inverse transform.
###################################################################
#
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import DegeneratePoint, InvalidInput, VerificationFailure
from .exactnum import RationalLike, as_rational, exact_root4
from .method_one import build_curve, mpq_to_quadruple, point_to_mpq
from .models import Provenance, Quadruple, Source
from .weierstrass import INFINITY, Affine, CurveW, PointQ, contains, multiples, point_on

log = logging.getLogger("quarticde")

_EXCLUDED_H = (Fraction(0), Fraction(1), Fraction(-1))


def quartic_residual(h: Fraction, Y: Fraction, Z: Fraction) -> Fraction:
    return Y * Y - (-(h ** 4) - (3 * Z * Z + 1) * h * h + Z ** 6)


@dataclass(frozen=True)
class HValue:
    h: Fraction
    Y: Fraction
    Z: Fraction
    source_point: PointQ = field(compare=False)
    multiple_index: int = 1

    def __post_init__(self):
        for name in ("h", "Y", "Z"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if quartic_residual(self.h, self.Y, self.Z) != 0:
            raise VerificationFailure(f"h={self.h}, Y={self.Y} is off the quartic for Z={self.Z}")


def build_eprime(Z: RationalLike) -> CurveW:
    Z = as_rational(Z)
    if Z == 0:
        raise InvalidInput("Z must be nonzero")
    z2 = Z * Z
    z6 = z2 ** 3
    return CurveW(a2=-(3 * z2 + 1), a4=4 * z6, a6=-(12 * z6 * z2 + 4 * z6))


def point_to_h(Z: RationalLike, P: PointQ, multiple_index: int = 1) -> HValue:
    Z = as_rational(Z)
    curve = build_eprime(Z)
    if P is INFINITY:
        raise DegeneratePoint("the point at infinity gives no h")
    if not contains(curve, P):
        raise InvalidInput(f"({P}) is not on E'({Z})")
    if P.y == 0:
        raise DegeneratePoint(f"({P}) is two-torsion on E'({Z}); no h recoverable")
    z3 = Z ** 3
    h = 2 * z3 * (P.x - (3 * Z * Z + 1)) / P.y
    Y = -z3 + h * h * P.x / (2 * z3)
    return HValue(h=h, Y=Y, Z=Z, source_point=P, multiple_index=multiple_index)


def h_to_quadruple(hv: HValue) -> Optional[Quadruple]:
    """Method-one tail at X = Z^2 + h^2; None when h is excluded or the result is trivial."""
    if hv.h in _EXCLUDED_H:
        return None
    point = Affine(hv.Z * hv.Z + hv.h * hv.h, hv.Y)
    if not contains(build_curve(hv.h), point):
        raise VerificationFailure(f"({point}) from Z={hv.Z} is not on E({hv.h})")
    triple = point_to_mpq(hv.h, point)
    provenance = Provenance.of(Source.METHOD_TWO, z=hv.Z, multiple=hv.multiple_index)
    return mpq_to_quadruple(hv.h, triple, provenance)


def _h_values(Z: Fraction, gen: PointQ, n_max: int) -> Tuple[List[HValue], int]:
    curve = build_eprime(Z)
    if gen is INFINITY or not contains(curve, gen):
        raise InvalidInput(f"generator {gen} is not an affine point on E'({Z})")
    out: List[HValue] = []
    skipped = 0
    for n, P in enumerate(multiples(curve, gen, n_max), start=1):
        if P is INFINITY or P.y == 0:
            skipped += 1
            continue
        hv = point_to_h(Z, P, multiple_index=n)
        if hv.h in _EXCLUDED_H:
            log.debug("[METHOD2] Z=%s multiple %d gives excluded h=%s", Z, n, hv.h)
            skipped += 1
            continue
        out.append(hv)
    return out, skipped


def enumerate_HZ(Z: RationalLike, gen: PointQ, n_max: int) -> List[HValue]:
    """Members of H(Z) from multiples 1..n_max of gen, by multiple index."""
    Z = as_rational(Z)
    if n_max < 1:
        raise InvalidInput("n_max must be >= 1")
    values, skipped = _h_values(Z, gen, n_max)
    log.info("[METHOD2] H(%s): %d values, %d degenerate multiples skipped", Z, len(values), skipped)
    return values


def load_generator(Z: RationalLike, x: RationalLike, y: RationalLike) -> Affine:
    return point_on(build_eprime(Z), x, y)


def _height(t: Fraction) -> int:
    return max(abs(t.numerator), t.denominator)


@dataclass(frozen=True)
class Conjecture2Match:
    z: Fraction
    multiple_index: int
    h: Fraction
    t: Fraction


@dataclass(frozen=True)
class Conjecture2Report:
    n: int
    matches: Tuple[Conjecture2Match, ...] = ()
    h_checked: int = 0
    skipped: int = 0

    @property
    def miss(self) -> bool:
        return not self.matches


def conjecture2_scan(
    n: int,
    z_list: Sequence[Tuple[RationalLike, PointQ]],
    n_max: int,
    t_height: int,
) -> Conjecture2Report:
    """Is n = t^4 h for some enumerated h in H(Z) and some t of height <= t_height?"""
    if n < 1:
        raise InvalidInput("n must be >= 1")
    if t_height < 1:
        raise InvalidInput("t_height must be >= 1")
    target = Fraction(n)
    matches: List[Conjecture2Match] = []
    checked = 0
    skipped = 0
    for z, gen in z_list:
        z = as_rational(z)
        values, skip = _h_values(z, gen, n_max)
        skipped += skip
        for hv in values:
            checked += 1
            ratio = target / hv.h
            t = exact_root4(ratio) if ratio > 0 else None
            # only the positive fourth root; -t gives the same t^4
            if t is None or _height(t) > t_height:
                continue
            matches.append(Conjecture2Match(z=z, multiple_index=hv.multiple_index, h=hv.h, t=t))
    matches.sort(key=lambda m: (_height(m.t), m.t.numerator, m.z, m.multiple_index))
    log.info("[METHOD2] conjecture2 n=%d: %d h-values, %d matches", n, checked, len(matches))
    return Conjecture2Report(n=n, matches=tuple(matches), h_checked=checked, skipped=skipped)
