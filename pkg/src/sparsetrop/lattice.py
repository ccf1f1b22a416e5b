"""Lattice point sets, convex hulls, faces and normalized volumes.

Hulls are computed by a placing triangulation over the integers: points are
inserted in lexicographic order and every boundary facet the new point sees
is coned off to it. The same sweep yields the normalized volume (sum of
|det| of the simplices) and the facet hyperplanes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence, Union

from . import linalg
from .exceptions import DimensionMismatch

Point = tuple[int, ...]


@dataclass(frozen=True)
class SupportSet:
    """A finite nonempty set of lattice points in Z^dim with nonnegative coordinates."""

    dim: int
    points: tuple[Point, ...]

    def __init__(self, points: Iterable[Sequence[int]], dim: int | None = None):
        pts = sorted({tuple(int(x) for x in p) for p in points})
        if not pts:
            raise ValueError("a support set must be nonempty")
        if dim is None:
            dim = len(pts[0])
        if dim < 1:
            raise ValueError("ambient dimension must be positive")
        for p in pts:
            if len(p) != dim:
                raise DimensionMismatch(f"point {p} does not live in Z^{dim}")
            if min(p) < 0:
                raise ValueError(f"point {p} has a negative coordinate")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", tuple(pts))

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return tuple(p) in set(self.points)

    def union(self, *others: "SupportSet") -> "SupportSet":
        pts = list(self.points)
        for o in others:
            _check_dims(self.dim, o.dim)
            pts.extend(o.points)
        return SupportSet(pts, self.dim)

    def intersection(self, other: "SupportSet") -> tuple[Point, ...]:
        """Common points (possibly empty, hence a plain tuple)."""
        s = set(other.points)
        return tuple(p for p in self.points if p in s)

    def __repr__(self):
        return f"SupportSet({list(self.points)!r})"


@dataclass(frozen=True)
class Polytope:
    dim_ambient: int
    vertices: tuple[tuple[Fraction, ...], ...]

    @property
    def affine_dim(self) -> int:
        return affine_dim(self.vertices)


@dataclass
class Hull:
    """Combinatorial data of conv(points).

    ``facets`` holds (inner normal, offset, vertex indices) with
    ``normal . x >= offset`` on the hull; normals are primitive integer vectors
    in ambient coordinates. ``lineality`` spans the directions orthogonal to
    the affine hull.
    """

    ambient: int
    dim: int
    vertices: list[Point]
    facets: list[tuple[Point, int, frozenset[int]]]
    volume: int
    lineality: list[Point] = field(default_factory=list)


PointsLike = Union[SupportSet, Iterable[Sequence[int]]]


def as_points(A: PointsLike) -> tuple[Point, ...]:
    if isinstance(A, SupportSet):
        return A.points
    return tuple(sorted({tuple(x for x in p) for p in A}))


def _check_dims(d1: int, d2: int):
    if d1 != d2:
        raise DimensionMismatch(f"dimension mismatch: {d1} vs {d2}")


def m_alpha(A: PointsLike, alpha: Sequence) -> Fraction:
    """min over a in A of <alpha, a>."""
    pts = as_points(A)
    _check_dims(len(pts[0]), len(alpha))
    return min(Fraction(linalg.dot(alpha, p)) for p in pts)


def face_alpha(A: PointsLike, alpha: Sequence) -> SupportSet:
    """Points of A where <alpha, .> attains its minimum."""
    pts = as_points(A)
    _check_dims(len(pts[0]), len(alpha))
    vals = [Fraction(linalg.dot(alpha, p)) for p in pts]
    m = min(vals)
    return SupportSet([p for p, v in zip(pts, vals) if v == m], len(pts[0]))


def minkowski_sum(A: PointsLike, B: PointsLike) -> SupportSet:
    pa, pb = as_points(A), as_points(B)
    _check_dims(len(pa[0]), len(pb[0]))
    return SupportSet({tuple(x + y for x, y in zip(a, b)) for a in pa for b in pb}, len(pa[0]))


def affine_dim(A: PointsLike) -> int:
    pts = list(as_points(A))
    p0 = pts[0]
    return linalg.rank([[x - y for x, y in zip(p, p0)] for p in pts[1:]])


def lattice_index(gens: Sequence[Sequence[int]]) -> int:
    """Index of the lattice generated by ``gens`` inside its saturation."""
    return linalg.lattice_index(gens)[0]


def lattice_rank(gens: Sequence[Sequence[int]]) -> int:
    return linalg.lattice_index(gens)[1]


# --- hulls -----------------------------------------------------------------


def _hull_1d(vals: list[int]):
    lo, hi = min(vals), max(vals)
    return hi - lo, [((1,), lo), ((-1,), -hi)]


def _placing_triangulation(pts: list[Point], k: int):
    """Boundary hyperplanes and normalized volume of conv(pts), full-dimensional in Z^k."""
    if k == 1:
        return _hull_1d([p[0] for p in pts])
    order = sorted(pts)
    simplex = [order[0]]
    diffs: list[list[int]] = []
    for q in order[1:]:
        cand = diffs + [[a - b for a, b in zip(q, order[0])]]
        if linalg.rank(cand) == len(cand):
            diffs = cand
            simplex.append(q)
            if len(simplex) == k + 1:
                break
    center = [sum(c) for c in zip(*simplex)]  # (k+1) * centroid
    kk = k + 1

    index = {p: i for i, p in enumerate(order)}
    facets: dict[tuple[int, ...], tuple[tuple[int, ...], int]] = {}

    def make_facet(idx: tuple[int, ...]):
        verts = [order[i] for i in idx]
        base = verts[0]
        n = linalg.cofactor_normal([[a - b for a, b in zip(v, base)] for v in verts[1:]], k)
        b = linalg.dot(n, base)
        if linalg.dot(n, center) < kk * b:
            n = tuple(-x for x in n)
            b = -b
        facets[tuple(sorted(idx))] = (n, b)

    sidx = [index[p] for p in simplex]
    for omit in range(k + 1):
        make_facet(tuple(sidx[:omit] + sidx[omit + 1:]))
    volume = abs(linalg.det_bareiss(diffs))

    in_simplex = set(sidx)
    for q in order:
        qi = index[q]
        if qi in in_simplex:
            continue
        visible = []
        for key, (n, b) in facets.items():
            s = 0
            for a, x in zip(n, q):
                s += a * x
            if s < b:
                visible.append(key)
                volume += b - s
        if not visible:
            continue
        ridges: dict[tuple[int, ...], int] = {}
        for key in visible:
            for r in combinations(key, k - 1):
                ridges[r] = ridges.get(r, 0) + 1
            del facets[key]
        for r, cnt in ridges.items():
            if cnt == 1:
                make_facet(r + (qi,))

    planes = {}
    for n, b in facets.values():
        g = reduce(gcd, n, 0)
        planes[(tuple(x // g for x in n), b // g)] = None
    return volume, list(planes)


def hull(A: PointsLike) -> Hull:
    """Vertices, facets and (if full-dimensional) normalized volume of conv(A)."""
    pts = list(as_points(A))
    d = len(pts[0])
    p0 = pts[0]
    diffs = [[x - y for x, y in zip(p, p0)] for p in pts[1:]]
    if diffs:
        red, piv = linalg.rref(diffs, d)
    else:
        red, piv = [], []
    k = len(piv)
    lineality = linalg.integer_nullspace(red, d) if red else [
        tuple(int(i == j) for j in range(d)) for i in range(d)]
    if k == 0:
        return Hull(d, 0, [p0], [], 1 if d == 0 else 0, lineality)

    proj = [tuple(p[c] for c in piv) for p in pts]
    volume, planes = _placing_triangulation(proj, k)

    on = []
    for n, b in planes:
        on.append({i for i, q in enumerate(proj) if linalg.dot(n, q) == b})
    vert_ids = []
    for i in range(len(pts)):
        normals = [planes[j][0] for j in range(len(planes)) if i in on[j]]
        if len(normals) >= k and linalg.rank(normals) == k:
            vert_ids.append(i)
    remap = {old: new for new, old in enumerate(vert_ids)}
    facets = []
    for (n, b), s in zip(planes, on):
        full = [0] * d
        for c, x in zip(piv, n):
            full[c] = x
        facets.append((tuple(full), b, frozenset(remap[i] for i in s if i in remap)))
    facets.sort()
    return Hull(d, k, [pts[i] for i in vert_ids], facets, volume if k == d else 0, lineality)


def vertices(A: PointsLike) -> list[Point]:
    return hull(A).vertices


def _to_integer_points(points) -> tuple[list[Point], int]:
    fr = [[Fraction(x) for x in p] for p in points]
    den = reduce(linalg.lcm, (x.denominator for p in fr for x in p), 1)
    return [tuple(int(x * den) for x in p) for p in fr], den


def convex_hull(points: Iterable[Sequence]) -> Polytope:
    pts = list(points)
    if not pts:
        raise ValueError("convex hull of an empty set")
    ints, den = _to_integer_points(pts)
    verts = sorted(hull(ints).vertices)
    return Polytope(len(ints[0]), tuple(tuple(Fraction(x, den) for x in v) for v in verts))


def normalized_volume(P: Union[Polytope, PointsLike]) -> int:
    """d! times the Euclidean volume; 0 for lower-dimensional input."""
    if isinstance(P, Polytope):
        ints, den = _to_integer_points(P.vertices)
        vol = Fraction(hull(ints).volume, den ** P.dim_ambient)
        return vol if vol.denominator != 1 else int(vol)
    return hull(P).volume


def minkowski_vertices(sets: Sequence[PointsLike]) -> list[Point]:
    """Vertices of conv(sum of sets), reducing to vertices after every addition."""
    acc = vertices(sets[0])
    for s in sets[1:]:
        vs = vertices(s)
        acc = vertices({tuple(x + y for x, y in zip(a, b)) for a in acc for b in vs})
    return acc


def in_hull(A: PointsLike, x: Sequence) -> bool:
    """Whether x lies in conv(A)."""
    h = hull(A)
    p0 = h.vertices[0]
    if any(linalg.dot(l, x) != linalg.dot(l, p0) for l in h.lineality):
        return False
    if h.dim == 0:
        return tuple(x) == p0
    return all(linalg.dot(n, x) >= b for n, b, _ in h.facets)
