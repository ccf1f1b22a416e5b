from fractions import Fraction

import pytest

from sparsetrop.cones import ConeV
from sparsetrop.exceptions import DimensionMismatch
from sparsetrop.tropical import (build_tropicalization, image_dimension, image_dimension_report, maximal_cones,
                                 membership, psi)
from tests.families import CURVE, SURFACE

R = {1: (1, 0, 0), 2: (0, 1, 0), 3: (0, 0, 1), 4: (-1, -1, -1), 5: (1, 1, 1)}
SURFACE_CONES = {(1, 2), (1, 3), (2, 3), (3, 4), (1, 5), (2, 5), (1, 4), (2, 4), (3, 5)}


@pytest.fixture(scope="module")
def surface_cones():
    return build_tropicalization(SURFACE)


def test_psi():
    assert psi(SURFACE, (1, 1)) == (2, 2, 2)
    assert psi(SURFACE, (-1, 0)) == (-3, -2, -3)
    with pytest.raises(DimensionMismatch):
        psi(SURFACE, (1, 1, 1))


def test_surface_maximal_cones(surface_cones):
    mcs = maximal_cones(surface_cones)
    expected = {ConeV([R[a], R[b]]) for a, b in SURFACE_CONES}
    assert {m.cone for m in mcs} == expected
    assert len(mcs) == 9
    assert all(m.convex for m in mcs)
    for m in mcs:
        assert m.cone.contains_relint(m.representative)


def test_surface_dimension(surface_cones):
    assert image_dimension(surface_cones) == 2
    assert image_dimension_report(surface_cones) == (2, False)


def test_interior_rays_from_psi(surface_cones):
    # psi of the edge directions of the Newton polygons lands inside merged cones
    for r, cone in [((-2, -3, -3), (1, 4)), ((-3, -2, -3), (2, 4)), ((2, 2, 3), (3, 5))]:
        ok, wit = membership(r, surface_cones)
        assert ok and wit
        assert ConeV([R[cone[0]], R[cone[1]]]).contains_relint(r)


def test_membership_outside(surface_cones):
    ok, wit = membership((1, -1, 0), surface_cones)
    assert not ok and wit == []
    with pytest.raises(DimensionMismatch):
        membership((1, 1), surface_cones)


def test_curve_rays():
    mcs = maximal_cones(build_tropicalization(CURVE))
    assert [m.rays for m in mcs] == [((-1, -1),), ((0, 1),), ((1, 0),)]


def test_image_of_lower_dimension():
    # f = (c1 x1 + ..., c2 x1 + ..., x2): the first two coordinates only see x1
    fam = [[(0, 0)], [(1, 0)], [(1, 0)], [(0, 1)]]
    cones = build_tropicalization(fam)
    assert image_dimension_report(cones) == (2, True)


def test_more_variables_than_coordinates_rejected():
    with pytest.raises(ValueError):
        build_tropicalization([[(0, 0)], [(1, 0)]])


def test_rational_membership(surface_cones):
    assert membership((Fraction(1, 2), Fraction(1, 3), 0), surface_cones)[0]
