#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/weierstrass.py
# Purpose: Exact group law on y^2 = x^3 + a2 x^2 + a4 x + a6 over Q.
#
# Description of code and how it works:
# - CurveW is an immutable coefficient triple; singular curves cannot be built.
# - Points (Affine / INFINITY) carry no curve; every operation takes the curve.
# - Chord-tangent addition, double-and-add multiplication, x-shifts with
#   their point maps, and a bounded naive search over x = n/d^2.
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.3.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.3.0 (2026-10-17): naive_point_search over the (d, n) grid.
# - 0.2.0 (2026-10-17): shift_x with forward/backward maps.
# - 0.1.0 (2026-10-17): Curve, points, add/mul/negate.
###################################################################
#
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from .errors import InvalidInput, PointNotOnCurve, SingularCurve
from .exactnum import RationalLike, as_rational, exact_sqrt

log = logging.getLogger("quarticde")


@dataclass(frozen=True)
class CurveW:
    a2: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a2", "a4", "a6"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if discriminant(self) == 0:
            raise SingularCurve(f"singular curve {self}")

    def rhs(self, x: Fraction) -> Fraction:
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({self.a2})x^2 + ({self.a4})x + ({self.a6})"


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


@dataclass(frozen=True)
class Affine:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __str__(self) -> str:
        return f"{self.x},{self.y}"


PointQ = Union[Affine, _Infinity]


def discriminant(c: CurveW) -> Fraction:
    """Standard discriminant of the cubic model (a1 = a3 = 0)."""
    b2 = 4 * c.a2
    b4 = 2 * c.a4
    b6 = 4 * c.a6
    b8 = 4 * c.a2 * c.a6 - c.a4 * c.a4
    return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def residual(c: CurveW, pt: PointQ) -> Fraction:
    if pt is INFINITY:
        return Fraction(0)
    return pt.y * pt.y - c.rhs(pt.x)


def contains(c: CurveW, pt: PointQ) -> bool:
    return pt is INFINITY or residual(c, pt) == 0


def point_on(c: CurveW, x: RationalLike, y: RationalLike) -> Affine:
    """Build an affine point, refusing it unless it lies on c."""
    pt = Affine(as_rational(x), as_rational(y))
    r = residual(c, pt)
    if r != 0:
        raise PointNotOnCurve(f"({pt}) is not on {c}; residual y^2 - f(x) = {r}", residual=r)
    return pt


def negate(c: CurveW, P: PointQ) -> PointQ:
    if P is INFINITY:
        return P
    return Affine(P.x, -P.y)


def add(c: CurveW, P: PointQ, Q: PointQ) -> PointQ:
    if P is INFINITY:
        return Q
    if Q is INFINITY:
        return P
    if P.x == Q.x:
        if P.y + Q.y == 0:
            # P == -Q, including doubling a two-torsion point
            return INFINITY
        # tangent
        lam = (3 * P.x * P.x + 2 * c.a2 * P.x + c.a4) / (2 * P.y)
    else:
        # secant
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - c.a2 - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return Affine(x3, y3)


def mul(c: CurveW, n: int, P: PointQ) -> PointQ:
    if n < 0:
        return negate(c, mul(c, -n, P))
    result: PointQ = INFINITY
    addend = P
    while n:
        if n & 1:
            result = add(c, result, addend)
        n >>= 1
        if n:
            addend = add(c, addend, addend)
    return result


def multiples(c: CurveW, P: PointQ, n_max: int) -> List[PointQ]:
    """[1P, 2P, ..., n_max P] by repeated addition."""
    out: List[PointQ] = []
    acc: PointQ = INFINITY
    for _ in range(n_max):
        acc = add(c, acc, P)
        out.append(acc)
    return out


@dataclass(frozen=True)
class CurveShift:
    """The curve in z = x - shift, with point maps both ways."""
    source: CurveW
    curve: CurveW
    shift: Fraction

    def forward(self, pt: PointQ) -> PointQ:
        if pt is INFINITY:
            return pt
        return Affine(pt.x - self.shift, pt.y)

    def backward(self, pt: PointQ) -> PointQ:
        if pt is INFINITY:
            return pt
        return Affine(pt.x + self.shift, pt.y)


def shift_x(c: CurveW, s: RationalLike) -> CurveShift:
    s = as_rational(s)
    shifted = CurveW(
        a2=3 * s + c.a2,
        a4=3 * s * s + 2 * c.a2 * s + c.a4,
        a6=c.rhs(s),
    )
    return CurveShift(source=c, curve=shifted, shift=s)


def naive_point_search(c: CurveW, height_bound: int) -> List[Affine]:
    """All affine points with x = n/d^2, |n| <= height_bound, d <= isqrt(height_bound).

    Ordered by ascending d, then n; +y is listed before -y.
    """
    if height_bound < 1:
        raise InvalidInput("height_bound must be >= 1")
    d_max = max(1, math.isqrt(height_bound))
    found: List[Affine] = []
    for d in range(1, d_max + 1):
        d2 = d * d
        for n in range(-height_bound, height_bound + 1):
            if d > 1 and math.gcd(n, d) != 1:
                continue
            x = Fraction(n, d2)
            y = exact_sqrt(c.rhs(x))
            if y is None:
                continue
            found.append(Affine(x, y))
            if y != 0:
                found.append(Affine(x, -y))
    log.debug("[CURVE] naive search bound=%d points=%d on %s", height_bound, len(found), c)
    return found
