"""Cones C_J^F of the tropicalized image and their maximal pieces.

For supports A_0, ..., A_n in Z^d, psi(alpha)_i = m_alpha(A_i) - m_alpha(A_0).
For every coherent collection F and index set J adapted to it, the cone

    C_J^F = psi(C^F) + R_{>=0}^J

lives in R^n, where e_0 stands for -(1, ..., 1). Their union is the
tropicalization; ``maximal_cones`` regroups the top-dimensional pieces into
the coarsest cones that no other sheet crosses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import fme, linalg
from .cones import ConeV, hcone_dim, hcone_to_v
from .exceptions import DimensionMismatch
from .fan import CoherentCollection, _supports, enumerate_coherent_collections, is_adapted
from .lattice import PointsLike, m_alpha


@dataclass
class TropicalCone:
    J: tuple[int, ...]
    collection: CoherentCollection
    cone: ConeV
    multiplicity: int | None = None
    provenance: list[tuple[tuple[int, ...], CoherentCollection]] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.cone.dim


def psi(supports: Sequence[PointsLike], alpha: Sequence) -> tuple[Fraction, ...]:
    sups = _supports(supports)
    if len(alpha) != sups[0].dim:
        raise DimensionMismatch(f"alpha has length {len(alpha)}, expected {sups[0].dim}")
    m0 = m_alpha(sups[0], alpha)
    return tuple(m_alpha(A, alpha) - m0 for A in sups[1:])


def base_points(F: CoherentCollection) -> list[tuple[int, ...]]:
    return [f.points[0] for f in F.faces]


def psi_linear(F: CoherentCollection, v: Sequence) -> tuple:
    """psi on the span of C^F, where it is the linear map alpha -> <alpha, p_i - p_0>."""
    p = base_points(F)
    return tuple(linalg.dot(v, pi) - linalg.dot(v, p[0]) for pi in p[1:])


def cone_for(F: CoherentCollection, J: Sequence[int], n: int) -> ConeV:
    rays = [psi_linear(F, r) for r in F.normal_cone.rays]
    lin = [psi_linear(F, v) for v in F.normal_cone.lineality]
    for j in J:
        if j == 0:
            rays.append(tuple([-1] * n))
        else:
            rays.append(tuple(int(i == j - 1) for i in range(n)))
    return ConeV(rays, lin, n)


def build_tropicalization(supports: Sequence[PointsLike],
                          collections: list[CoherentCollection] | None = None) -> list[TropicalCone]:
    """Every C_J^F with F adapted to J, duplicates merged (provenance kept)."""
    sups = _supports(supports)
    d, n = sups[0].dim, len(sups) - 1
    if d > n:
        raise ValueError(f"need d <= n, got d={d}, n={n}")
    if collections is None:
        collections = enumerate_coherent_collections(sups)
    found: dict = {}
    for F in collections:
        adapted = [()]
        layer = [()]
        for size in range(1, d + 1):
            nxt = []
            seen = set()
            for J in layer:
                for j in range((J[-1] + 1) if J else 0, n + 1):
                    K = J + (j,)
                    if K in seen:
                        continue
                    seen.add(K)
                    # every subfamily of an essential family is essential
                    if all(K[:i] + K[i + 1:] in set(layer) for i in range(len(K))) and is_adapted(F, K):
                        nxt.append(K)
            adapted.extend(nxt)
            layer = nxt
        for J in adapted:
            c = cone_for(F, J, n)
            if c.key() in found:
                found[c.key()].provenance.append((J, F))
            else:
                found[c.key()] = TropicalCone(J, F, c, provenance=[(J, F)])
    return sorted(found.values(), key=lambda t: (t.dim, t.cone.key(), t.J))


def membership(w: Sequence, cones: Sequence[TropicalCone]) -> tuple[bool, list[tuple[tuple[int, ...], CoherentCollection]]]:
    """Whether w lies in the union, with every (J, F) whose cone contains it."""
    wit = []
    for t in cones:
        if len(w) != t.cone.ambient:
            raise DimensionMismatch(f"point has length {len(w)}, cones live in R^{t.cone.ambient}")
        if t.cone.contains(w):
            wit.extend(t.provenance)
    return bool(wit), wit


def image_dimension(cones: Sequence[TropicalCone]) -> int:
    return image_dimension_report(cones)[0]


def image_dimension_report(cones: Sequence[TropicalCone]) -> tuple[int, bool]:
    """(max cone dimension, whether only J = () cones attain it)."""
    if not cones:
        return 0, False
    top = max(t.dim for t in cones)
    attained = [t for t in cones if t.dim == top]
    only_empty = all(all(len(J) == 0 for J, _ in t.provenance) for t in attained)
    return top, only_empty


# --- maximal cones ------------------------------------------------------------


@dataclass
class MaximalCone:
    cone: ConeV
    representative: tuple[int, ...]
    pieces: list[ConeV]
    sources: list[TropicalCone]
    convex: bool = True

    @property
    def rays(self):
        return self.cone.rays

    @property
    def dim(self):
        return self.cone.dim


def _strict(rows):
    return [(list(r), -1) for r in rows]


def _chambers(hyperplanes, k):
    """Open chambers of a central arrangement in Q^k: (sign vector, interior point)."""
    regions = [((), [])]
    for h in hyperplanes:
        nxt = []
        for signs, rows in regions:
            for s in (1, -1):
                cand = rows + [tuple(s * x for x in h)]
                if fme.feasible(k, (), _strict(cand)):
                    nxt.append((signs + (s,), cand))
        regions = nxt
    out = []
    for signs, rows in regions:
        pt = fme.solve(k, (), _strict(rows))
        out.append((signs, rows, pt))
    return out


def _to_ambient(basis, c):
    d = len(basis[0])
    return tuple(sum(Fraction(ci) * b[i] for ci, b in zip(c, basis)) for i in range(d))


def _pullback(basis, cone: ConeV):
    """H-form of cone intersected with span(basis), in basis coordinates."""
    eqs, ineqs = cone.hrep()
    pe = [tuple(linalg.dot(e, b) for b in basis) for e in eqs]
    pi = [tuple(linalg.dot(n, b) for b in basis) for n in ineqs]
    return pe, pi


def maximal_cones(cones: Sequence[TropicalCone]) -> list[MaximalCone]:
    """Coarsest cones covering the top-dimensional part of the union.

    Top cones are grouped by linear span. Inside each span the facets of its
    cones and its traces with the other spans cut out an arrangement; inside
    chambers are glued across walls unless a cone from another span meets
    the wall in codimension one there.
    """
    if not cones:
        return []
    ambient = cones[0].cone.ambient
    kmax = max(t.dim for t in cones)
    top = [t for t in cones if t.dim == kmax]
    groups: dict[tuple, list[TropicalCone]] = {}
    for t in top:
        groups.setdefault(t.cone.span_basis(), []).append(t)
    spans = sorted(groups)

    out = []
    for P in spans:
        members = groups[P]
        k = kmax
        basis = linalg.saturated_basis(list(P), ambient)
        hyper = set()
        for t in members:
            _, pi = _pullback(basis, t.cone)
            for n in pi:
                hyper.add(linalg.sign_normalized(linalg.primitive(n)))
        others = [t for Q in spans if Q != P for t in groups[Q]]
        for Q in spans:
            if Q == P:
                continue
            # trace of span Q inside P, in P's coordinates
            qperp = linalg.integer_nullspace(list(Q), ambient)
            rows = [tuple(linalg.dot(e, b) for b in basis) for e in qperp]
            rows = [r for r in rows if any(r)]
            if rows and linalg.rank(rows) == 1:
                hyper.add(linalg.sign_normalized(linalg.primitive(rows[0])))
        hyper = sorted(hyper)
        if k == 0:
            out.append(MaximalCone(members[0].cone, tuple([0] * ambient), [members[0].cone], members))
            continue

        chambers = _chambers(hyper, k)
        inside = []
        for signs, rows, pt in chambers:
            x = _to_ambient(basis, pt)
            if any(t.cone.contains(x) for t in members):
                inside.append((signs, rows, pt))
        parent = list(range(len(inside)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        other_pull = [_pullback(basis, t.cone) for t in others]
        for a, b in combinations(range(len(inside)), 2):
            sa, sb = inside[a][0], inside[b][0]
            diff = [i for i in range(len(sa)) if sa[i] != sb[i]]
            if len(diff) != 1:
                continue
            h = hyper[diff[0]]
            wall_ineqs = [r for r in inside[a][1] if linalg.sign_normalized(linalg.primitive(r)) != h]
            blocked = False
            for pe, pi in other_pull:
                if hcone_dim([h] + pe, wall_ineqs + pi, k) >= k - 1:
                    blocked = True
                    break
            if not blocked:
                parent[find(a)] = find(b)

        comps: dict[int, list[int]] = {}
        for i in range(len(inside)):
            comps.setdefault(find(i), []).append(i)
        for idx in comps.values():
            pieces = []
            for i in idx:
                ch = hcone_to_v((), inside[i][1], k)
                pieces.append(ConeV([_to_ambient(basis, r) for r in ch.rays],
                                    [_to_ambient(basis, v) for v in ch.lineality], ambient))
            whole = ConeV([r for p in pieces for r in p.rays],
                          [v for p in pieces for v in p.lineality], ambient)
            rep = linalg.primitive(_to_ambient(basis, inside[idx[0]][2]))
            convex = True
            for signs, rows, pt in chambers:
                x = _to_ambient(basis, pt)
                if whole.contains_relint(x) and not any(inside[i][0] == signs for i in idx):
                    convex = False
            srcs = [t for t in members if any(t.cone.contains(_to_ambient(basis, inside[i][2])) for i in idx)]
            out.append(MaximalCone(whole, rep, pieces, srcs, convex))

    # lower-dimensional cones not inside any top cone are maximal on their own
    for t in cones:
        if t.dim == kmax:
            continue
        gens = list(t.cone.rays) + list(t.cone.lineality) + [tuple(-x for x in v) for v in t.cone.lineality]
        covered = any(all(m.contains(g) for g in gens) for m in (s.cone for s in top))
        if not covered and not any(all(mc.cone.contains(g) for g in gens) for mc in out):
            out.append(MaximalCone(t.cone, linalg.primitive(t.cone.relint_point()) if t.cone.rays else
                                   tuple([0] * ambient), [t.cone], [t]))
    out.sort(key=lambda m: (-m.dim, m.cone.key()))
    return out
