"""Rational polyhedral cones.

A cone is stored in V-form, cone(rays) + span(lineality), with a canonical
choice of generators so that equal cones compare equal. Conversions to and
from H-form (equations ``e . x == 0`` and inequalities ``n . x >= 0``) go by
brute force over tight subsets, which is plenty for the sizes met here.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import fme, linalg

IntVec = tuple[int, ...]


def _cone_solve(rays, lin, w, d) -> bool:
    """Is w in cone(rays) + span(lin)?"""
    nr, nl = len(rays), len(lin)
    gens = list(rays) + list(lin)
    if not gens:
        return not any(w)
    eqs = [([g[c] for g in gens], -Fraction(w[c])) for c in range(d)]
    ineqs = [([int(i == j) for j in range(nr + nl)], 0) for i in range(nr)]
    return fme.feasible(nr + nl, eqs, ineqs)


class ConeV:
    """cone(rays) + span(lineality) in Q^ambient, canonically generated."""

    __slots__ = ("ambient", "rays", "lineality", "_hrep", "_dim")

    def __init__(self, rays: Iterable[Sequence], lineality: Iterable[Sequence] = (),
                 ambient: int | None = None):
        rays = [linalg.primitive(r) for r in rays]
        lin = [linalg.primitive(v) for v in lineality]
        if ambient is None:
            ambient = len((rays or lin)[0])
        d = ambient
        rays = sorted({r for r in rays if any(r)})
        lin = [v for v in lin if any(v)]

        # Generators whose negatives lie in the cone belong to the lineality space.
        changed = True
        while changed:
            changed = False
            for r in rays:
                if _cone_solve([x for x in rays if x != r] + [r], lin, tuple(-x for x in r), d):
                    lin.append(r)
                    rays = [x for x in rays if x != r]
                    changed = True
                    break
        lin_basis = linalg.canonical_subspace_basis(lin, d) if lin else ()
        proj = set()
        for r in rays:
            p = linalg.primitive(linalg.project_out(r, lin_basis)) if lin_basis else r
            if any(p):
                proj.add(p)
        proj = sorted(proj)
        extreme = [r for r in proj
                   if not _cone_solve([x for x in proj if x != r], lin_basis, r, d)]
        self.ambient = d
        self.rays: tuple[IntVec, ...] = tuple(extreme)
        self.lineality: tuple[IntVec, ...] = tuple(lin_basis)
        self._hrep = None
        self._dim = None

    # -- basic data ---------------------------------------------------------

    @property
    def dim(self) -> int:
        if self._dim is None:
            gens = list(self.rays) + list(self.lineality)
            self._dim = linalg.rank(gens) if gens else 0
        return self._dim

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    def span_basis(self) -> tuple[IntVec, ...]:
        return linalg.canonical_subspace_basis(list(self.rays) + list(self.lineality), self.ambient)

    def relint_point(self) -> IntVec:
        out = [0] * self.ambient
        for r in self.rays:
            out = [a + b for a, b in zip(out, r)]
        return tuple(out)

    def key(self):
        return (self.ambient, self.rays, self.lineality)

    def __eq__(self, other):
        return isinstance(other, ConeV) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.lineality:
            return f"ConeV(rays={list(self.rays)}, lineality={list(self.lineality)})"
        return f"ConeV(rays={list(self.rays)})"

    # -- H-form -------------------------------------------------------------

    def hrep(self) -> tuple[list[IntVec], list[IntVec]]:
        """(equations, inequalities) cutting out the cone."""
        if self._hrep is None:
            self._hrep = _v_to_h(self.rays, self.lineality, self.ambient, self.dim)
        return self._hrep

    def facet_normals(self) -> list[IntVec]:
        return self.hrep()[1]

    def contains(self, w: Sequence) -> bool:
        eqs, ineqs = self.hrep()
        return all(linalg.dot(e, w) == 0 for e in eqs) and all(linalg.dot(n, w) >= 0 for n in ineqs)

    def contains_relint(self, w: Sequence) -> bool:
        eqs, ineqs = self.hrep()
        return all(linalg.dot(e, w) == 0 for e in eqs) and all(linalg.dot(n, w) > 0 for n in ineqs)

    def faces(self) -> list["ConeV"]:
        """All faces, including the lineality space and the cone itself."""
        _, ineqs = self.hrep()
        out = {self}
        for k in range(1, len(ineqs) + 1):
            for sub in combinations(ineqs, k):
                rs = [r for r in self.rays if all(linalg.dot(n, r) == 0 for n in sub)]
                out.add(ConeV(rs, self.lineality, self.ambient))
        return sorted(out, key=lambda c: (c.dim, c.key()))


def _v_to_h(rays, lin, d, k):
    gens = list(rays) + list(lin)
    if not gens:
        return [tuple(int(i == j) for j in range(d)) for i in range(d)], []
    span = linalg.canonical_subspace_basis(gens, d)
    eqs = linalg.integer_nullspace(span, d)
    ineqs: set[IntVec] = set()
    need = k - 1 - len(lin)
    if not rays:
        return eqs, []
    for sub in combinations(rays, need):
        tight = list(sub) + list(lin)
        if tight and linalg.rank(tight) != k - 1:
            continue
        # normal: combination of span vectors orthogonal to the tight generators
        if tight:
            mat = [[linalg.dot(s, t) for s in span] for t in tight]
            sol = linalg.nullspace(mat, len(span))
        else:
            sol = [tuple(Fraction(1) if i == 0 else Fraction(0) for i in range(len(span)))]
        if len(sol) != 1:
            continue
        n = [sum(c * s[i] for c, s in zip(sol[0], span)) for i in range(d)]
        n = linalg.primitive(n)
        vals = [linalg.dot(n, r) for r in rays]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            n = tuple(-x for x in n)
        else:
            continue
        if any(vals):
            ineqs.add(n)
    return eqs, sorted(ineqs)


def hcone_implicit(eqs: Sequence[Sequence], ineqs: Sequence[Sequence], d: int):
    """Split inequalities into (implicit equalities, the rest) and return a relint point.

    The point is a sum of witnesses, one per non-implicit inequality, so it is
    strictly positive on every one of them.
    """
    fe = [(list(e), 0) for e in eqs]
    implicit, free, point = [], [], [Fraction(0)] * d
    for i, n in enumerate(ineqs):
        others = [(list(m), 0) for j, m in enumerate(ineqs) if j != i]
        sol = fme.solve(d, fe, others + [(list(n), -1)])
        if sol is None:
            implicit.append(tuple(n))
        else:
            free.append(tuple(n))
            point = [a + b for a, b in zip(point, sol)]
    return implicit, free, tuple(point)


def hcone_dim(eqs: Sequence[Sequence], ineqs: Sequence[Sequence], d: int) -> int:
    implicit, _, _ = hcone_implicit(eqs, ineqs, d)
    rows = [tuple(e) for e in eqs] + implicit
    return d - (linalg.rank(rows) if rows else 0)


def hcone_to_v(eqs: Sequence[Sequence], ineqs: Sequence[Sequence], d: int) -> ConeV:
    """V-form of {x : eqs . x == 0, ineqs . x >= 0}."""
    implicit, free, _ = hcone_implicit(eqs, ineqs, d)
    all_eqs = [tuple(e) for e in eqs] + implicit
    lin_rows = all_eqs + free
    lin = linalg.integer_nullspace(lin_rows, d) if lin_rows else [
        tuple(int(i == j) for j in range(d)) for i in range(d)]
    if not free:
        return ConeV([], lin, d)
    # Pointed part: extreme rays of C intersected with lin^perp.
    base = all_eqs + [tuple(linalg.primitive(v)) for v in lin]
    base_rank = linalg.rank(base) if base else 0
    m = d - base_rank  # dimension of the pointed part
    rays = set()
    for sub in combinations(free, m - 1):
        rows = base + list(sub)
        if rows and linalg.rank(rows) != d - 1:
            continue
        ns = linalg.integer_nullspace(rows, d) if rows else [(1,)] * (d == 1)
        if len(ns) != 1:
            continue
        r = ns[0]
        vals = [linalg.dot(n, r) for n in free]
        if all(v >= 0 for v in vals):
            rays.add(r)
        elif all(v <= 0 for v in vals):
            rays.add(tuple(-x for x in r))
    return ConeV(sorted(rays), lin, d)


def intersect(c1: ConeV, c2: ConeV) -> ConeV:
    e1, i1 = c1.hrep()
    e2, i2 = c2.hrep()
    return hcone_to_v(list(e1) + list(e2), list(i1) + list(i2), c1.ambient)


def intersection_dim(c1: ConeV, c2: ConeV) -> int:
    e1, i1 = c1.hrep()
    e2, i2 = c2.hrep()
    return hcone_dim(list(e1) + list(e2), list(i1) + list(i2), c1.ambient)
