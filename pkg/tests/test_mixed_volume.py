import pytest

from sparsetrop import oracle
from sparsetrop.exceptions import DimensionMismatch
from sparsetrop.lattice import hull
from sparsetrop.mixed_volume import mixed_volume, mixed_volume_in_span
from tests.families import STRICT_CHAIN


def test_unit_simplices():
    for d in (1, 2, 3):
        simplex = [tuple(int(i == j) for j in range(d)) for i in range(d)] + [(0,) * d]
        assert mixed_volume([simplex] * d) == 1


def test_segments():
    assert mixed_volume([[(0, 0), (2, 0)], [(0, 0), (0, 3)]]) == 6
    assert mixed_volume([[(0, 0), (2, 0)], [(0, 0), (1, 0)]]) == 0


def test_bezout():
    deg = lambda k: [(0, 0), (k, 0), (0, k)]
    assert mixed_volume([deg(2), deg(3)]) == 6


def test_diagonal_is_volume():
    A = [(0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (3, 1)]
    assert mixed_volume([A, A]) == hull(A).volume == 11


def test_strict_chain_end_values():
    # the two extreme d_I of the strict-chain family, by the oracle as well
    A0, A1, A2, A3 = STRICT_CHAIN
    fam = [A0 + A2 + A3, A1 + A2 + A3]
    assert mixed_volume(fam) == oracle.mixed_volume_bruteforce(fam) == 10
    fam = [A1 + A0 + A3, A2 + A0 + A3]
    assert mixed_volume(fam) == oracle.mixed_volume_bruteforce(fam) == 9
    fam = [A1 + A0 + A2, A3 + A0 + A2]
    assert mixed_volume(fam) == oracle.mixed_volume_bruteforce(fam) == 6


def test_wrong_count():
    with pytest.raises(DimensionMismatch):
        mixed_volume([[(0, 0)]])


def test_in_span():
    # two segments in a plane of Z^3
    fam = [[(0, 0, 0), (1, 0, 0)], [(0, 0, 0), (0, 1, 0)]]
    assert mixed_volume_in_span(fam) == 1
    assert mixed_volume_in_span([[(0, 0, 0), (1, 1, 0)], [(0, 0, 0), (2, 2, 0)]]) == 0
    assert mixed_volume_in_span([]) == 1
    # lattice-normalized inside the span: (2,0,0) step counts twice
    assert mixed_volume_in_span([[(0, 0, 0), (2, 0, 0)]]) == 2
