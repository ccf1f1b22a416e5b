"""Normalized mixed volumes by inclusion-exclusion over Minkowski sums."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from . import linalg
from .exceptions import DimensionMismatch, IntegralityViolation
from .lattice import PointsLike, as_points, hull


def _check(sets: Sequence[PointsLike]) -> list[tuple]:
    pts = [as_points(s) for s in sets]
    d = len(pts)
    if d == 0:
        raise ValueError("need at least one set")
    for p in pts:
        if not p:
            raise ValueError("empty support set")
        if len(p[0]) != d:
            raise DimensionMismatch(f"{d} sets need ambient dimension {d}, got {len(p[0])}")
    return pts


def _mv(pts: list[tuple]) -> int:
    d = len(pts)
    sums: dict[int, list] = {}
    total = 0
    for mask in range(1, 1 << d):
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        if rest:
            cand = {tuple(a + b for a, b in zip(u, v)) for u in sums[rest] for v in sums[low]}
        else:
            cand = pts[i]
        h = hull(cand)
        sums[mask] = h.vertices
        if h.volume:
            sign = -1 if (d - bin(mask).count("1")) % 2 else 1
            total += sign * h.volume
    q, r = divmod(total, factorial(d))
    if r:
        raise IntegralityViolation(f"mixed volume came out fractional: {Fraction(total, factorial(d))}")
    return q


def mixed_volume(sets: Sequence[PointsLike]) -> int:
    """MV(A_1, ..., A_d) for d sets in Z^d, normalized so MV(A, ..., A) = vol(conv A)."""
    return _mv(_check(sets))


def lattice_coordinates(basis: Sequence[Sequence[int]], vectors: Sequence[Sequence[int]]):
    """Coordinates of ``vectors`` (assumed in the Z-span of ``basis``) w.r.t. ``basis``."""
    k = len(basis)
    _, piv = linalg.rref(basis, len(basis[0]))
    rows = [[basis[j][c] for j in range(k)] for c in piv]
    out = []
    for v in vectors:
        sol = linalg.solve(rows, [v[c] for c in piv])
        if sol is None or any(x.denominator != 1 for x in sol):
            raise ValueError(f"{v} is not in the lattice")
        out.append(tuple(int(x) for x in sol))
    return out


def mixed_volume_in_span(sets: Sequence[PointsLike]) -> int:
    """Mixed volume of k sets in the k-dimensional lattice spanned by their directions.

    Each set is translated to start at its first point; the value is 0 when the
    directions do not span exactly k dimensions and 1 for the empty family.
    """
    k = len(sets)
    if k == 0:
        return 1
    pts = [as_points(s) for s in sets]
    d = len(pts[0][0])
    diffs = [tuple(x - y for x, y in zip(p, s[0])) for s in pts for p in s[1:]]
    basis = linalg.saturated_basis(diffs, d)
    if len(basis) != k:
        return 0
    local = [lattice_coordinates(basis, [tuple(x - y for x, y in zip(p, s[0])) for p in s])
             for s in pts]
    return _mv(local)


def mixed_volume_oracle(sets: Sequence[PointsLike]) -> int:
    """Same value by a route that shares no hull code with ``mixed_volume``."""
    from . import oracle
    return oracle.mixed_volume_bruteforce(_check(sets))
