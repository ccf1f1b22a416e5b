"""Multiplicities of regular points.

The map f = (f_1/f_0, ..., f_n/f_0) factors as rho . F with
F = (f_0, ..., f_n) and rho the torus map whose tropicalization is
A(w_0, ..., w_n) = (w_1 - w_0, ..., w_n - w_0). Multiplicities on the image
of F come from lattice indices and mixed volumes of faces. They are then
pushed forward along A.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .cones import ConeV
from .exceptions import DimensionMismatch, IntegralityViolation, NotInTropicalization, NotRegular
from .fan import CoherentCollection, _supports, enumerate_coherent_collections, is_adapted
from .lattice import PointsLike, m_alpha
from .mixed_volume import mixed_volume_in_span
from .tropical import TropicalCone, build_tropicalization, maximal_cones


@dataclass(frozen=True)
class LatticeMapA:
    n: int

    @property
    def matrix(self) -> list[list[int]]:
        return [[-1] + [int(j == i) for j in range(self.n)] for i in range(self.n)]

    def __call__(self, w: Sequence) -> tuple:
        if len(w) != self.n + 1:
            raise DimensionMismatch(f"A takes vectors of length {self.n + 1}")
        return tuple(x - w[0] for x in w[1:])


@dataclass(frozen=True)
class MultiplicityQuery:
    w: tuple
    deg_F: int = 1
    deg_rho: int = 1

    def __post_init__(self):
        if self.deg_F < 1 or self.deg_rho < 1:
            raise ValueError("degrees must be positive")


@dataclass
class Preimage:
    v: tuple[Fraction, ...]
    m_v: int
    index: int


@dataclass
class MultiplicityReport:
    w: tuple
    m_w: int
    preimages: list[Preimage] = field(default_factory=list)


def psi_ST(supports: Sequence[PointsLike], alpha: Sequence) -> tuple[Fraction, ...]:
    sups = _supports(supports)
    if len(alpha) != sups[0].dim:
        raise DimensionMismatch(f"alpha has length {len(alpha)}, expected {sups[0].dim}")
    return tuple(m_alpha(A, alpha) for A in sups)


def _psi_st_linear(F: CoherentCollection, v):
    return tuple(linalg.dot(v, f.points[0]) for f in F.faces)


def trop_F(supports: Sequence[PointsLike],
           collections: list[CoherentCollection] | None = None) -> list[TropicalCone]:
    """Cones Psi^ST(C^F) + R_{>=0}^J in R^{n+1}, one per adapted pair (J, F)."""
    sups = _supports(supports)
    d, n = sups[0].dim, len(sups) - 1
    if collections is None:
        collections = enumerate_coherent_collections(sups)
    found: dict = {}
    for F in collections:
        for size in range(0, d + 1):
            for J in combinations(range(n + 1), size):
                if not is_adapted(F, J):
                    continue
                rays = [_psi_st_linear(F, r) for r in F.normal_cone.rays]
                rays += [tuple(int(i == j) for i in range(n + 1)) for j in J]
                lin = [_psi_st_linear(F, l) for l in F.normal_cone.lineality]
                c = ConeV(rays, lin, n + 1)
                if c.key() in found:
                    found[c.key()].provenance.append((J, F))
                else:
                    found[c.key()] = TropicalCone(J, F, c, provenance=[(J, F)])
    return sorted(found.values(), key=lambda t: (t.dim, t.cone.key(), t.J))


def index_FJ(F: CoherentCollection, J: Sequence[int]) -> int:
    """Index of Psi^ST(span(C^F) cap Z^d) + Z^J in its saturation; 0 unless it has rank d."""
    d = F.faces[0].dim
    n1 = len(F.faces)
    gens = [_psi_st_linear(F, b) for b in
            linalg.saturated_basis(list(F.normal_cone.rays) + list(F.normal_cone.lineality), d)]
    gens += [tuple(int(i == j) for i in range(n1)) for j in J]
    idx, rk = linalg.lattice_index(gens)
    return idx if rk == d else 0


def m_v(v: Sequence, supports: Sequence[PointsLike], deg_F: int = 1,
        cones_F: list[TropicalCone] | None = None) -> int:
    """Sum of index(F, J) * MV(F_j | j in J) over adapted pairs whose cone holds v, over deg_F."""
    if cones_F is None:
        cones_F = trop_F(supports)
    total = 0
    hit = False
    for t in cones_F:
        if not t.cone.contains(v):
            continue
        hit = True
        for J, F in t.provenance:
            idx = index_FJ(F, J)
            if idx:
                total += idx * mixed_volume_in_span([F.faces[j] for j in J])
    if not hit:
        raise NotInTropicalization(f"{tuple(v)} lies in no cone")
    q, r = divmod(total, deg_F)
    if r:
        raise IntegralityViolation(f"m_v = {Fraction(total, deg_F)} is not an integer; check deg_F")
    return q


def _local_span(point, cones: Sequence[TropicalCone]):
    top = max(t.dim for t in cones)
    spans = {t.cone.span_basis() for t in cones if t.dim == top and t.cone.contains(point)}
    if not spans:
        return None
    if len(spans) != 1:
        raise NotRegular(f"{tuple(point)} lies on several top-dimensional sheets")
    return next(iter(spans))


def _fiber_points(w, cones_F: Sequence[TropicalCone]):
    """Points of A^{-1}(w) = (0, w) + R(1, ..., 1) meeting top cones of trop(F)."""
    v0 = (Fraction(0),) + tuple(Fraction(x) for x in w)
    top = max(t.dim for t in cones_F)
    pts = set()
    for t in cones_F:
        if t.dim != top:
            continue
        eqs, ineqs = t.cone.hrep()
        lo, hi, ok, fixed = None, None, True, None
        for e in eqs:
            a, b = sum(e), linalg.dot(e, v0)  # a t + b == 0
            if a == 0:
                if b != 0:
                    ok = False
            else:
                tt = -Fraction(b) / a
                if fixed is not None and fixed != tt:
                    ok = False
                fixed = tt
        for nrm in ineqs:
            a, b = sum(nrm), linalg.dot(nrm, v0)  # a t + b >= 0
            if a > 0:
                lo = -Fraction(b) / a if lo is None else max(lo, -Fraction(b) / a)
            elif a < 0:
                hi = -Fraction(b) / a if hi is None else min(hi, -Fraction(b) / a)
            elif b < 0:
                ok = False
        if not ok:
            continue
        if fixed is not None:
            if (lo is not None and fixed < lo) or (hi is not None and fixed > hi):
                continue
            pts.add(tuple(x + fixed for x in v0))
        elif lo is not None and lo == hi:
            pts.add(tuple(x + lo for x in v0))
        # otherwise a whole segment of the fiber lies in the cone and A collapses it
    return sorted(pts)


def pushforward_index(Lv: Sequence[Sequence[int]], Lw: Sequence[Sequence[int]], n: int) -> int:
    A = LatticeMapA(n)
    sat = linalg.saturated_basis(list(Lv), n + 1)
    img = [A(b) for b in sat]
    if linalg.canonical_subspace_basis(img, n) != linalg.canonical_subspace_basis(list(Lw), n):
        return 0
    return linalg.lattice_index(img)[0]


def m_w(q: MultiplicityQuery, supports: Sequence[PointsLike],
        cones_F: list[TropicalCone] | None = None,
        cones_f: list[TropicalCone] | None = None) -> MultiplicityReport:
    """Multiplicity of the tropicalized image of f at a regular point w."""
    sups = _supports(supports)
    n = len(sups) - 1
    w = tuple(Fraction(x) for x in q.w)
    if len(w) != n:
        raise DimensionMismatch(f"w must have length {n}")
    colls = None
    if cones_F is None or cones_f is None:
        colls = enumerate_coherent_collections(sups)
    if cones_F is None:
        cones_F = trop_F(sups, colls)
    if cones_f is None:
        cones_f = build_tropicalization(sups, colls)
    Lw = _local_span(w, cones_f)
    if Lw is None:
        raise NotInTropicalization(f"{q.w} lies in no top-dimensional cone")
    total = 0
    pre = []
    for v in _fiber_points(w, cones_F):
        Lv = _local_span(v, cones_F)
        mv = m_v(v, sups, q.deg_F, cones_F)
        idx = pushforward_index(Lv, Lw, n)
        pre.append(Preimage(v, mv, idx))
        total += mv * idx
    if not pre:
        raise NotInTropicalization(f"{q.w} has no preimage")
    val, r = divmod(total, q.deg_rho)
    if r:
        raise IntegralityViolation(f"m_w = {Fraction(total, q.deg_rho)} is not an integer; check deg_rho")
    return MultiplicityReport(q.w, val, pre)


def multiplicities(supports: Sequence[PointsLike], deg_F: int = 1, deg_rho: int = 1):
    """(maximal cone, report at its representative point) for every maximal cone."""
    sups = _supports(supports)
    colls = enumerate_coherent_collections(sups)
    cf = build_tropicalization(sups, colls)
    cF = trop_F(sups, colls)
    out = []
    for mc in maximal_cones(cf):
        rep = m_w(MultiplicityQuery(mc.representative, deg_F, deg_rho), sups, cF, cf)
        out.append((mc, rep))
    return out
