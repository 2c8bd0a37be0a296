#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/connectors/generators.py
# Purpose: Generator-point files (one "x,y" point per line) with curve validation.
#
# Description of code and how it works:
# - Blank lines and everything after '#' are ignored.
# - Components are exact rationals "num/den"; floats are refused.
# - load_generators() checks every point against the target curve and
#   fails on the first bad line with the exact residual y^2 - f(x).
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.1.1
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.1.1 (2026-10-17): Line numbers in validation errors.
# - 0.1.0 (2026-10-17): Initial loader.
###################################################################
#
from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path
from typing import List, Tuple, Union

from ..errors import InvalidInput, PointNotOnCurve
from ..exactnum import parse_pair
from ..weierstrass import Affine, CurveW, point_on

log = logging.getLogger("quarticde")


def read_points(path: Union[str, Path]) -> List[Tuple[int, Fraction, Fraction]]:
    """(line number, x, y) for every point line in the file."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InvalidInput(f"cannot read generator file {p}: {e}") from e
    out: List[Tuple[int, Fraction, Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            x, y = parse_pair(line)
        except InvalidInput as e:
            raise InvalidInput(f"{p}:{lineno}: {e}") from e
        out.append((lineno, x, y))
    if not out:
        raise InvalidInput(f"generator file {p} has no points")
    return out


def load_generators(path: Union[str, Path], curve: CurveW) -> List[Affine]:
    points: List[Affine] = []
    for lineno, x, y in read_points(path):
        try:
            points.append(point_on(curve, x, y))
        except PointNotOnCurve as e:
            raise PointNotOnCurve(f"{path}:{lineno}: {e}", residual=e.residual) from e
    log.info("[CLI] loaded %d generator(s) from %s", len(points), path)
    return points
