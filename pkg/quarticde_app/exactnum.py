#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/exactnum.py
# Purpose: Exact integer/rational helpers used by every other module.
#
# Description of code and how it works:
# - Rational is fractions.Fraction: always reduced, positive denominator,
#   zero stored as 0/1, immutable. Equality is therefore structural.
# - Square and fourth-power roots go through math.isqrt on numerator and
#   denominator separately (a reduced fraction is a square iff both are).
# - Strict "num/den" parsing: decimal points and exponents are rejected so
#   no float ever enters a computation.
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.1.2
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.1.2 (2026-10-17): exact_root4 + fourth_power_part for twist chains.
# - 0.1.1 (2026-10-17): Strict rational/point string parsing.
# - 0.1.0 (2026-10-17): Initial exact arithmetic helpers.
###################################################################
#
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import InvalidInput

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")

# fourth_power_part gives up beyond this trial divisor
_FOURTH_POWER_TRIAL_LIMIT = 10_000


def rat(num: RationalLike, den: RationalLike = 1) -> Fraction:
    """Canonical rational num/den; the sign always lands on the numerator."""
    if den == 0:
        raise InvalidInput(f"zero denominator in {num}/{den}")
    return Fraction(num) / Fraction(den)


def as_rational(value: Union[RationalLike, str]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInput(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidInput(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse "n" or "n/d". Floats ("1.5", "2e3") are refused."""
    m = _RATIONAL_RE.match(text or "")
    if not m:
        raise InvalidInput(f"expected an exact rational 'num/den', got {text!r}")
    num, den = m.group(1), m.group(2)
    return rat(int(num), int(den) if den is not None else 1)


def parse_rational_list(text: str) -> List[Fraction]:
    parts = [p for p in (text or "").split(",") if p.strip()]
    if not parts:
        raise InvalidInput(f"expected a comma-separated list of rationals, got {text!r}")
    return [parse_rational(p) for p in parts]


def parse_pair(text: str) -> Tuple[Fraction, Fraction]:
    """Parse a point string "x,y" with rational components."""
    parts = (text or "").split(",")
    if len(parts) != 2:
        raise InvalidInput(f"expected a point 'x,y', got {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


def exact_isqrt(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def exact_sqrt(x: RationalLike) -> Optional[Fraction]:
    """Nonnegative r with r*r == x, or None when x is not a rational square."""
    x = Fraction(x)
    if x < 0:
        return None
    num = exact_isqrt(x.numerator)
    if num is None:
        return None
    den = exact_isqrt(x.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def exact_root4(x: RationalLike) -> Optional[Fraction]:
    r = exact_sqrt(x)
    return exact_sqrt(r) if r is not None else None


def is_square(x: RationalLike) -> bool:
    return exact_sqrt(x) is not None


def lcm_all(values: Iterable[int]) -> int:
    return reduce(math.lcm, values, 1)


def gcd_all(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)


def clear_denominators(values: Sequence[RationalLike]) -> Tuple[List[int], int]:
    """Scale by the lcm of denominators; returns (integers, scale)."""
    if not values:
        raise InvalidInput("clear_denominators needs at least one value")
    fracs = [Fraction(v) for v in values]
    scale = lcm_all(f.denominator for f in fracs)
    return [f.numerator * (scale // f.denominator) for f in fracs], scale


def fourth_power_part(x: RationalLike) -> int:
    """Largest integer t such that t**4 divides the numerator of x.

    Trial division stops at a fixed limit, so the answer can be too small
    for numerators with a huge prime fourth-power factor.
    """
    n = abs(Fraction(x).numerator)
    if n == 0:
        return 1
    t = 1
    d = 2
    while d <= _FOURTH_POWER_TRIAL_LIMIT and d ** 4 <= n:
        d4 = d ** 4
        while n % d4 == 0:
            n //= d4
            t *= d
        d += 1
    return t
