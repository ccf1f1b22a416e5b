from fractions import Fraction

import pytest

from sparsetrop import linalg
from sparsetrop.exceptions import IntegralityViolation, NotInTropicalization
from sparsetrop.fan import enumerate_coherent_collections
from sparsetrop.multiplicity import (LatticeMapA, MultiplicityQuery, index_FJ, m_v, m_w, multiplicities,
                                     pushforward_index, trop_F)
from tests.families import CURVE, SURFACE


def test_lattice_map():
    A = LatticeMapA(2)
    assert A((1, 3, 1)) == (2, 0)
    assert A.matrix == [[-1, 1, 0], [-1, 0, 1]]


def test_curve_table():
    rep = {r.w: r for _, r in multiplicities(CURVE, deg_F=1, deg_rho=2)}
    assert set(rep) == {(-1, -1), (0, 1), (1, 0)}
    assert all(r.m_w == 2 for r in rep.values())
    pre = {w: sorted((p.v, p.m_v, p.index) for p in r.preimages) for w, r in rep.items()}
    h = Fraction(1, 2)
    assert pre[(1, 0)] == [((0, 1, 0), 2, 1), ((h, 3 * h, h), 1, 2)]
    assert pre[(-1, -1)] == [((-3 * h, -5 * h, -5 * h), 1, 2), ((1, 0, 0), 2, 1)]
    assert pre[(0, 1)] == [((0, 0, 1), 4, 1)]


def test_curve_at_scaled_point():
    rep = m_w(MultiplicityQuery((3, 0), 1, 2), CURVE)
    assert rep.m_w == 2
    assert sorted(p.v for p in rep.preimages) == [(0, 3, 0), (Fraction(3, 2), Fraction(9, 2), Fraction(3, 2))]


def test_wrong_degree_is_not_integral():
    with pytest.raises(IntegralityViolation):
        m_w(MultiplicityQuery((1, 0), 1, 3), CURVE)


def test_point_outside():
    with pytest.raises(NotInTropicalization):
        m_w(MultiplicityQuery((1, 1)), CURVE)


def test_bad_query():
    with pytest.raises(ValueError):
        MultiplicityQuery((1, 0), 0, 1)


def _balanced(entries, ambient):
    """Around every ray of a 2-dimensional fan, sum of m * (other generator) lies on the ray."""
    rays = {r for rs, _ in entries for r in rs}
    for r in rays:
        acc = [0] * ambient
        for rs, m in entries:
            if r not in rs:
                continue
            (s,) = [x for x in rs if x != r]
            assert linalg.lattice_index([r, s])[0] == 1
            acc = [a + m * x for a, x in zip(acc, s)]
        if any(acc) and not linalg.in_span(acc, [r]):
            return False
    return True


def test_curve_balancing():
    entries = [(mc.rays, rep.m_w) for mc, rep in multiplicities(CURVE, 1, 2)]
    total = [sum(m * r[0][i] for r, m in entries) for i in range(2)]
    assert total == [0, 0]


def test_surface_multiplicities_are_edge_lengths():
    # edges of the Newton polytope conv{4e_i, 9e_i}: 9 on the far triangle, 4 on the near
    # one and 5 on the three edges joining them
    got = {mc.rays: rep.m_w for mc, rep in multiplicities(SURFACE)}
    far = (-1, -1, -1)
    near = (1, 1, 1)
    for rays, m in got.items():
        if far in rays:
            assert m == 9
        elif near in rays:
            assert m == 4
        else:
            assert m == 5
    assert _balanced(list(got.items()), 3)


def test_trop_F_lives_one_dimension_up():
    cones = trop_F(CURVE)
    assert all(t.cone.ambient == 3 for t in cones)
    assert max(t.dim for t in cones) == 1
    assert {t.cone.rays for t in cones if t.dim == 1} == {((-3, -5, -5),), ((0, 0, 1),), ((0, 1, 0),),
                                                          ((1, 0, 0),), ((1, 3, 1),)}
    assert m_v((0, 0, 1), CURVE, 1, cones) == 4


def test_index_of_trivial_pair():
    F = enumerate_coherent_collections(SURFACE)[0]
    assert index_FJ(F, (1, 2)) == 1


def test_pushforward_index():
    assert pushforward_index([(1, 3, 1)], [(1, 0)], 2) == 2
    assert pushforward_index([(-3, -5, -5)], [(1, 1)], 2) == 2
    assert pushforward_index([(0, 1, 0)], [(1, 0)], 2) == 1
    assert pushforward_index([(0, 1, 0)], [(0, 1)], 2) == 0
