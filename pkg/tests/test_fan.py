import pytest
from hypothesis import given, settings

from sparsetrop import oracle
from sparsetrop.fan import enumerate_coherent_collections, is_adapted, is_essential
from sparsetrop.lattice import face_alpha
from tests.families import SURFACE
from tests.strategies import family


def _keys(colls):
    return {tuple(f.points for f in F.faces) for F in colls}


def test_segment_has_three_cells():
    colls = enumerate_coherent_collections([[(0,), (1,)]])
    assert len(colls) == 3
    assert colls[0].is_trivial() and colls[0].dim == 0
    assert _keys(colls) == set(oracle.faces_by_sampling([[(0,), (1,)]], 1))


def test_triangle_has_seven_cells():
    colls = enumerate_coherent_collections([[(0, 0), (1, 0), (0, 1)]])
    assert len(colls) == 7
    assert sorted(F.dim for F in colls) == [0, 1, 1, 1, 2, 2, 2]


def test_lower_dimensional_sum_has_lineality():
    colls = enumerate_coherent_collections([[(0, 0, 0), (1, 0, 0)], [(0, 0, 0), (0, 1, 0)]])
    trivial = colls[0]
    assert trivial.is_trivial()
    assert trivial.normal_cone.lineality_dim == 1
    assert all(F.normal_cone.lineality_dim == 1 for F in colls)
    assert len(colls) == 9


def test_surface_family_collections():
    colls = enumerate_coherent_collections(SURFACE)
    assert len(colls) == 17
    sampled = set(oracle.faces_by_sampling(SURFACE, 5))
    assert sampled == _keys(colls)


def test_witness_cuts_out_the_faces():
    for F in enumerate_coherent_collections(SURFACE):
        for A, f in zip(SURFACE, F.faces):
            assert face_alpha(A, F.witness_alpha) == f
        assert F.normal_cone.contains_relint(F.witness_alpha) or F.is_trivial()


@pytest.mark.parametrize("fam,expected", [
    ([[(0, 0), (1, 0)], [(0, 0), (2, 0)]], False),
    ([[(0, 0), (1, 0)], [(0, 0), (0, 1)]], True),
    ([[(0, 0)]], False),
    ([[(2, 1, 0), (2, 0, 1)], [(2, 1, 0), (1, 0, 0)]], True),
    ([], True),
])
def test_essential(fam, expected):
    assert is_essential(fam) == expected
    if fam:
        assert oracle.essential_bruteforce(fam) == expected


def test_adapted_requires_small_J():
    F = enumerate_coherent_collections(SURFACE)[0]
    assert is_adapted(F, ())
    assert is_adapted(F, (1, 2))
    assert not is_adapted(F, (0, 1))
    assert not is_adapted(F, (1, 2, 3))


@settings(max_examples=100)
@given(family(3, 3, 4, 2))
def test_essential_agrees_with_oracle(fam):
    assert is_essential(fam) == oracle.essential_bruteforce(fam)
