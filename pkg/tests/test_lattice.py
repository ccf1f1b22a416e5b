from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sparsetrop import linalg, oracle
from sparsetrop.exceptions import DimensionMismatch
from sparsetrop.lattice import (Polytope, SupportSet, affine_dim, convex_hull, face_alpha, hull, in_hull,
                                lattice_index, m_alpha, minkowski_sum, normalized_volume, vertices)
from tests.strategies import support


def test_support_set_is_canonical():
    A = SupportSet([(1, 0), (0, 1), (1, 0)])
    assert A.points == ((0, 1), (1, 0))
    assert A.dim == 2
    assert (1, 0) in A


@pytest.mark.parametrize("pts", [[], [(-1, 0)]])
def test_support_set_rejects(pts):
    with pytest.raises(ValueError):
        SupportSet(pts)


def test_support_set_mixed_lengths():
    with pytest.raises(DimensionMismatch):
        SupportSet([(0, 0), (1, 0, 0)])


def test_m_alpha_and_face():
    A = [(0, 0), (1, 0), (0, 1)]
    assert m_alpha(A, (1, 1)) == 0
    assert face_alpha(A, (0, -1)).points == ((0, 1),)
    assert face_alpha(A, (0, 0)).points == tuple(sorted(A))
    assert m_alpha(A, (Fraction(-1, 2), 1)) == Fraction(-1, 2)


def test_m_alpha_dimension_check():
    with pytest.raises(DimensionMismatch):
        m_alpha([(0, 0)], (1, 2, 3))


def test_minkowski_sum():
    S = minkowski_sum([(0, 0), (1, 0)], [(0, 0), (0, 1)])
    assert S.points == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_square_volume():
    assert normalized_volume([(0, 0), (1, 0), (0, 1), (1, 1)]) == 2


def test_hexagon_hull():
    pts = [(1, 1), (0, 1), (0, 2), (1, 0), (2, 0), (3, 1), (1, 3)]
    h = hull(pts)
    assert h.vertices == [(0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (3, 1)]
    assert h.volume == 11
    assert len(h.facets) == 6


def test_cube_volume_4d():
    from itertools import product
    pts = list(product((0, 2), repeat=4))
    assert normalized_volume(pts) == 24 * 16


def test_lower_dimensional_hull():
    h = hull([(0, 0, 0), (1, 1, 0), (2, 2, 0)])
    assert h.dim == 1
    assert h.volume == 0
    assert h.vertices == [(0, 0, 0), (2, 2, 0)]
    assert len(h.lineality) == 2


def test_single_point_hull():
    h = hull([(3, 1)])
    assert h.dim == 0 and h.vertices == [(3, 1)]


def test_rational_hull():
    P = convex_hull([(0, 0), (Fraction(1, 2), 0), (0, Fraction(1, 2)), (Fraction(1, 8), Fraction(1, 8))])
    assert P.vertices == ((0, 0), (0, Fraction(1, 2)), (Fraction(1, 2), 0))
    assert normalized_volume(P) == Fraction(1, 4)


def test_in_hull():
    T = [(0, 0, 0), (2, 0, 0), (0, 2, 0)]
    assert in_hull(T, (1, 1, 0))
    assert not in_hull(T, (1, 1, 1))
    assert not in_hull(T, (2, 1, 0))
    assert in_hull([(1, 1)], (1, 1)) and not in_hull([(1, 1)], (1, 0))


def test_affine_dim():
    assert affine_dim([(0, 0)]) == 0
    assert affine_dim([(0, 0), (1, 1), (2, 2)]) == 1


@pytest.mark.parametrize("gens,idx", [
    ([(2, 0), (0, 1)], 2),
    ([(1, 1), (1, -1)], 2),
    ([(2, 4)], 2),
    ([(1, 2, 3), (4, 5, 6)], 3),
    ([], 1),
])
def test_lattice_index_against_minors(gens, idx):
    assert lattice_index(gens) == idx
    assert oracle.lattice_index_minors(gens) == idx


@settings(max_examples=60)
@given(st.lists(st.tuples(*[st.integers(-4, 4)] * 3), min_size=1, max_size=4))
def test_lattice_index_property(gens):
    assert lattice_index(gens) == oracle.lattice_index_minors(gens)


@settings(max_examples=50)
@given(st.integers(2, 3).flatmap(lambda d: support(d, 7, 4)))
def test_volume_matches_oracle(A):
    assert hull(A).volume == oracle.volume_bruteforce(A)


@settings(max_examples=40)
@given(support(2, 8, 5))
def test_planar_volume_matches_shoelace(A):
    assert hull(A).volume == oracle.area2_monotone(A)


@settings(max_examples=40)
@given(support(3, 7, 3))
def test_vertices_are_extreme(A):
    vs = vertices(A)
    for v in vs:
        rest = [p for p in A if p != v]
        assert not rest or not in_hull(rest, v)
    for p in A:
        assert in_hull(vs, p)


def test_primitive_and_sign():
    assert linalg.primitive((4, -6, 0)) == (2, -3, 0)
    assert linalg.primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert linalg.sign_normalized((0, -2, 1)) == (0, 2, -1)
