#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: tests/test_weierstrass.py
# Purpose: Curve model, group law, shifts and naive point search
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

from quarticde_app.errors import InvalidInput, PointNotOnCurve, SingularCurve
from quarticde_app.method_one import build_curve, build_depressed
from quarticde_app.weierstrass import (
    INFINITY,
    Affine,
    CurveW,
    add,
    contains,
    discriminant,
    mul,
    multiples,
    naive_point_search,
    negate,
    point_on,
    residual,
    shift_x,
)

from .conftest import random_rational

E16_MULTIPLES = [
    (2, Affine(Fraction(313), Fraction(-275))),
    (3, Affine(Fraction(995860, 729), Fraction(-727724440, 19683))),
    (4, Affine(Fraction(123577441, 302500), Fraction(305200800239, 166375000))),
]


@pytest.mark.parametrize("n,expected", E16_MULTIPLES)
def test_group_law_golden_vectors(e16_gen, n, expected):
    curve = build_curve(16)
    assert mul(curve, n, e16_gen) == expected
    assert contains(curve, expected)


def test_multiples_match_mul(e16_gen):
    curve = build_curve(16)
    listed = multiples(curve, e16_gen, 4)
    assert listed == [mul(curve, n, e16_gen) for n in range(1, 5)]


def test_group_identities(e16_gen):
    curve = build_curve(16)
    P2 = add(curve, e16_gen, e16_gen)
    assert add(curve, e16_gen, negate(curve, e16_gen)) is INFINITY
    assert add(curve, INFINITY, e16_gen) == e16_gen
    assert add(curve, P2, e16_gen) == add(curve, e16_gen, P2)
    assert mul(curve, -3, e16_gen) == negate(curve, mul(curve, 3, e16_gen))
    assert mul(curve, 0, e16_gen) is INFINITY


@pytest.fixture(params=["e16", "e103_8"])
def curve_and_gen(request, e16_gen, e103_8_gen):
    if request.param == "e16":
        return build_curve(16), e16_gen
    return build_curve(Fraction(103, 8)), e103_8_gen


def test_group_law_is_associative(curve_and_gen):
    curve, gen = curve_and_gen
    pts = multiples(curve, gen, 5)
    for P in pts:
        for Q in pts:
            for R in pts:
                assert add(curve, add(curve, P, Q), R) == add(curve, P, add(curve, Q, R))


def test_mul_is_additive(curve_and_gen):
    curve, gen = curve_and_gen
    for m in range(-3, 5):
        for n in range(-3, 5):
            assert mul(curve, m + n, gen) == add(curve, mul(curve, m, gen), mul(curve, n, gen))


def test_two_torsion_doubles_to_infinity():
    # y^2 = x^3 - x has (0, 0), (1, 0), (-1, 0)
    curve = CurveW(0, -1, 0)
    T = point_on(curve, 1, 0)
    assert add(curve, T, T) is INFINITY


def test_point_on_reports_residual():
    curve = build_curve(16)
    with pytest.raises(PointNotOnCurve) as exc:
        point_on(curve, 340, 681)
    assert exc.value.residual == Fraction(681 ** 2 - 680 ** 2)
    assert residual(curve, Affine(Fraction(340), Fraction(680))) == 0


def test_singular_curve_refused():
    with pytest.raises(SingularCurve):
        CurveW(0, 0, 0)


def test_depressed_discriminant_closed_form(rng):
    assert discriminant(build_depressed(2)) == -62208
    checked = 0
    while checked < 100:
        h = random_rational(rng)
        if h in (0, 1, -1):
            continue
        assert discriminant(build_depressed(h)) == -432 * h ** 4 * (h * h - 1) ** 2
        checked += 1


def test_shift_x_gives_depressed_model(e16_gen):
    sh = shift_x(build_curve(16), 256)
    assert sh.curve == build_depressed(16)
    moved = sh.forward(e16_gen)
    assert moved == Affine(Fraction(84), Fraction(680))
    assert contains(sh.curve, moved)
    assert sh.backward(moved) == e16_gen
    assert sh.forward(INFINITY) is INFINITY


def test_shift_x_depressed_for_random_h(rng):
    checked = 0
    while checked < 50:
        h = random_rational(rng)
        if h in (0, 1, -1):
            continue
        assert shift_x(build_curve(h), h * h).curve == build_depressed(h)
        checked += 1


def test_naive_point_search_order_and_signs():
    points = naive_point_search(build_depressed(16), 100)
    assert Affine(Fraction(84), Fraction(680)) in points
    i = points.index(Affine(Fraction(84), Fraction(680)))
    assert points[i + 1] == Affine(Fraction(84), Fraction(-680))
    with pytest.raises(InvalidInput):
        naive_point_search(build_depressed(16), 0)
