#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: tests/test_generators.py
# Purpose: Generator-point files
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

from quarticde_app.connectors.generators import load_generators, read_points
from quarticde_app.errors import InvalidInput, PointNotOnCurve
from quarticde_app.method_one import build_curve
from quarticde_app.weierstrass import Affine


def test_read_points_skips_comments(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("# E(16)\n\n340,680   # generator\n313/1,-275\n", encoding="utf-8")
    assert read_points(path) == [
        (3, Fraction(340), Fraction(680)),
        (4, Fraction(313), Fraction(-275)),
    ]
    assert load_generators(path, build_curve(16)) == [
        Affine(Fraction(340), Fraction(680)),
        Affine(Fraction(313), Fraction(-275)),
    ]


def test_bad_point_names_the_line(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("340,680\n340,681\n", encoding="utf-8")
    with pytest.raises(PointNotOnCurve) as exc:
        load_generators(path, build_curve(16))
    assert f"{path}:2:" in str(exc.value)
    assert exc.value.residual == 681 ** 2 - 680 ** 2


@pytest.mark.parametrize("text", ["", "# only a comment\n", "1.5,2\n", "1,2,3\n"])
def test_unreadable_files(tmp_path, text):
    path = tmp_path / "gens.txt"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(InvalidInput):
        read_points(path)


def test_missing_file(tmp_path):
    with pytest.raises(InvalidInput):
        read_points(tmp_path / "nope.txt")


def test_non_utf8_file(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_bytes(b"340,680 \xff\n")
    with pytest.raises(InvalidInput):
        read_points(path)
