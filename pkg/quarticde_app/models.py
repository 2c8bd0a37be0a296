#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/models.py
# Purpose: Shared domain records: Quadruple, Provenance, and the equation checks.
#
# Description of code and how it works:
# - equation_holds() is the one exact oracle for u*A^4 + v*B^4 = u*C^4 + v*D^4
#   with h = v/u reduced; every module verifies through it.
# - normalize_quadruple() strips signs, clears denominators, divides by the
#   gcd and returns None for trivial identities.
# - Quadruple re-checks its invariants on construction.
# - canonical_form() picks one representative per solution class
#   (side swap, and the in-side swaps available when h is a fourth power).
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.3.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.3.0 (2026-10-17): Canonical solution classes for search and comparisons.
# - 0.2.0 (2026-10-17): Triviality via term multisets (covers h = t^4).
# - 0.1.0 (2026-10-17): Quadruple + Provenance records.
###################################################################
#
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from .errors import VerificationFailure
from .exactnum import RationalLike, as_rational, clear_denominators, exact_root4, gcd_all


class Source(str, Enum):
    METHOD_ONE = "method-one"
    METHOD_TWO = "method-two"
    PARAMETRIC = "parametric"
    SEARCH = "search"
    PRINTED = "printed"


@dataclass(frozen=True)
class Provenance:
    source: Source
    detail: Tuple[Tuple[str, str], ...] = ()
    twist_t: Optional[Fraction] = None
    chain: Tuple[str, ...] = ()

    @classmethod
    def of(cls, source: Source, **detail: Any) -> "Provenance":
        return cls(source=source, detail=tuple((k, str(v)) for k, v in detail.items()))

    def then(self, step: str, twist_t: Optional[Fraction] = None) -> "Provenance":
        t = self.twist_t
        if twist_t is not None:
            t = twist_t if t is None else t * twist_t
        return replace(self, chain=self.chain + (step,), twist_t=t)

    @property
    def details(self) -> Dict[str, str]:
        return dict(self.detail)

    def tag(self) -> str:
        parts = [self.source.value] + [f"{k}={v}" for k, v in self.detail]
        return ":".join(parts)


def equation_holds(h: RationalLike, A: int, B: int, C: int, D: int) -> bool:
    h = as_rational(h)
    u, v = h.denominator, h.numerator
    return u * A ** 4 + v * B ** 4 == u * C ** 4 + v * D ** 4


def _terms(h: Fraction, A: int, B: int, C: int, D: int):
    u, v = h.denominator, h.numerator
    return sorted((u * A ** 4, v * B ** 4)), sorted((u * C ** 4, v * D ** 4))


def is_trivial(h: RationalLike, A: int, B: int, C: int, D: int) -> bool:
    """Both sides are the same two terms (A=C, B=D; or the swap when h is a fourth power)."""
    left, right = _terms(as_rational(h), A, B, C, D)
    return left == right


def _primitive(values: Sequence[RationalLike]) -> Tuple[int, int, int, int]:
    ints, _ = clear_denominators([abs(Fraction(v)) for v in values])
    g = gcd_all(ints)
    if g == 0:
        return (0, 0, 0, 0)
    return tuple(i // g for i in ints)  # type: ignore[return-value]


@dataclass(frozen=True)
class Quadruple:
    h: Fraction
    A: int
    B: int
    C: int
    D: int
    provenance: Provenance = field(default_factory=lambda: Provenance(Source.PRINTED), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "h", as_rational(self.h))
        coords = self.coords
        if min(coords) < 0:
            raise VerificationFailure(f"negative coordinate in {coords}")
        if gcd_all(coords) != 1:
            raise VerificationFailure(f"non-primitive quadruple {coords}")
        if not equation_holds(self.h, *coords):
            raise VerificationFailure(f"{coords} does not satisfy the equation for h={self.h}")
        if is_trivial(self.h, *coords):
            raise VerificationFailure(f"{coords} is a trivial identity for h={self.h}")

    @property
    def coords(self) -> Tuple[int, int, int, int]:
        return (self.A, self.B, self.C, self.D)

    def __str__(self) -> str:
        return f"Quadruple({self.h}; {self.A}, {self.B}, {self.C}, {self.D})"


def normalize_quadruple(
    h: RationalLike,
    values: Sequence[RationalLike],
    provenance: Optional[Provenance] = None,
) -> Optional[Quadruple]:
    """Canonical primitive representative, or None for a trivial identity."""
    h = as_rational(h)
    A, B, C, D = _primitive(values)
    if (A, B, C, D) == (0, 0, 0, 0) or is_trivial(h, A, B, C, D):
        return None
    if not equation_holds(h, A, B, C, D):
        raise VerificationFailure(f"normalized {(A, B, C, D)} fails the equation for h={h}")
    return Quadruple(h, A, B, C, D, provenance or Provenance(Source.PRINTED))


def _orbit(h: Fraction, coords: Tuple[int, int, int, int]):
    A, B, C, D = (Fraction(x) for x in coords)
    members = {coords, _primitive((C, D, A, B))}
    s = exact_root4(h) if h > 0 else None
    if s is not None:
        # A^4 + s^4 B^4 = (sB)^4 + s^4 (A/s)^4, likewise on the right side
        for a, b, c, d in list(members):
            a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
            left = (s * b, a / s)
            right = (s * d, c / s)
            members.add(_primitive((left[0], left[1], c, d)))
            members.add(_primitive((a, b, right[0], right[1])))
            members.add(_primitive((left[0], left[1], right[0], right[1])))
        members |= {_primitive((m[2], m[3], m[0], m[1])) for m in list(members)}
    return members


def canonical_form(h: RationalLike, A: int, B: int, C: int, D: int) -> Tuple[int, int, int, int]:
    """Lexicographically largest member of the solution class with A > C."""
    h = as_rational(h)
    coords = _primitive((A, B, C, D))
    oriented = [m for m in _orbit(h, coords) if m[0] > m[2]]
    if not oriented:
        return coords
    return max(oriented)


def same_solution(h: RationalLike, first: Sequence[int], second: Sequence[int]) -> bool:
    return canonical_form(h, *first) == canonical_form(h, *second)
