"""Coherent face collections, i.e. the cones of the inner normal fan of a Minkowski sum."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import linalg
from .cones import ConeV
from .exceptions import DimensionMismatch
from .lattice import PointsLike, SupportSet, as_points, face_alpha, hull, minkowski_vertices


@dataclass(frozen=True)
class CoherentCollection:
    """Faces (F_0, ..., F_n) cut out by one direction, with their normal cone."""

    faces: tuple[SupportSet, ...]
    normal_cone: ConeV
    witness_alpha: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.normal_cone.dim

    def is_trivial(self) -> bool:
        """True when every face is the whole support (the class of alpha = 0)."""
        return not any(self.witness_alpha)

    def __repr__(self):
        return f"CoherentCollection(witness={self.witness_alpha}, faces={[list(f) for f in self.faces]})"


def _supports(sets: Sequence[PointsLike]) -> list[SupportSet]:
    out = [s if isinstance(s, SupportSet) else SupportSet(s) for s in sets]
    if not out:
        raise ValueError("need at least one support")
    d = out[0].dim
    for s in out:
        if s.dim != d:
            raise DimensionMismatch(f"supports live in different dimensions: {d} vs {s.dim}")
    return out


def enumerate_coherent_collections(supports: Sequence[PointsLike]) -> list[CoherentCollection]:
    """One collection per cone of the inner normal fan of conv(A_0 + ... + A_n).

    Sorted by (cone dimension, witness). The whole-support collection comes with
    the lineality space of the fan as its normal cone.
    """
    sups = _supports(supports)
    d = sups[0].dim
    h = hull(minkowski_vertices(sups))
    lin = h.lineality

    facet_sets = [s for _, _, s in h.facets]
    normals = [n for n, _, _ in h.facets]
    faces = {frozenset(range(len(h.vertices)))}
    frontier = set(facet_sets)
    while frontier:
        faces |= frontier
        nxt = set()
        for a in frontier:
            for b in facet_sets:
                c = a & b
                if c and c not in faces:
                    nxt.add(c)
        frontier = nxt

    out = []
    for G in faces:
        containing = [normals[j] for j, s in enumerate(facet_sets) if G <= s]
        cone = ConeV(containing, lin, d)
        w = [0] * d
        for n in containing:
            w = [a + b for a, b in zip(w, n)]
        w = tuple(w)
        out.append(CoherentCollection(tuple(face_alpha(A, w) for A in sups), cone, w))
    out.sort(key=lambda c: (c.dim, c.witness_alpha))
    return out


def is_essential(family: Iterable[PointsLike]) -> bool:
    """Every subfamily J with |J| <= d has a Minkowski sum of dimension >= |J|."""
    fam = [as_points(s) for s in family]
    if not fam:
        return True
    d = len(fam[0][0])
    dirs = [[tuple(x - y for x, y in zip(p, s[0])) for p in s[1:]] for s in fam]
    for size in range(1, min(len(fam), d) + 1):
        for sub in combinations(range(len(fam)), size):
            vecs = [v for i in sub for v in dirs[i]]
            if len(vecs) < size or linalg.rank(vecs) < size:
                return False
    return True


def is_adapted(F: CoherentCollection, J: Iterable[int]) -> bool:
    J = sorted(set(J))
    if not J:
        return True
    d = F.faces[0].dim
    return len(J) <= d and is_essential([F.faces[j] for j in J])
