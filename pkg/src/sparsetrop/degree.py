"""Degree of the closed image: the lifted mixed volume, the d_I and the hull volume.

For supports A_0, ..., A_n in Z^d the chain

    MV(A_0^{n+1-d}, ..., A_n^{n+1-d}) <= min d_I <= max d_I <= vol(conv(U A_j))

holds, the left end being deg(S) * deg(f) for generic coefficients. The
``check_*`` functions decide the combinatorial criteria for the individual
inequalities to be equalities (hypersurface case d = n - 1).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from . import linalg
from .exceptions import IntegralityViolation, InvariantViolation
from .fan import CoherentCollection, _supports, enumerate_coherent_collections, is_essential
from .lattice import PointsLike, SupportSet, affine_dim, hull, in_hull
from .mixed_volume import mixed_volume


def lift_support(A: PointsLike, j: int) -> SupportSet:
    """(A, 0) together with the unit vectors e_{d+1}, ..., e_{d+j} in Z^{d+j}."""
    if j < 1:
        raise ValueError("lift order must be positive")
    A = A if isinstance(A, SupportSet) else SupportSet(A)
    d = A.dim
    pts = [p + (0,) * j for p in A.points]
    pts += [tuple(int(c == d + k) for c in range(d + j)) for k in range(j)]
    return SupportSet(pts, d + j)


def build_AiI(supports: Sequence[PointsLike], i: int, I: Sequence[int]) -> SupportSet:
    """A_i together with every A_j, j not in I."""
    sups = _supports(supports)
    I = set(I)
    if i not in I:
        raise ValueError(f"index {i} is not in {sorted(I)}")
    return sups[i].union(*[sups[j] for j in range(len(sups)) if j not in I])


def d_I(supports: Sequence[PointsLike], I: Sequence[int]) -> int:
    sups = _supports(supports)
    I = sorted(set(I))
    if len(I) != sups[0].dim:
        raise ValueError(f"|I| must be {sups[0].dim}, got {len(I)}")
    return mixed_volume([build_AiI(sups, i, I) for i in I])


def mv_lift(supports: Sequence[PointsLike]) -> int:
    sups = _supports(supports)
    j = len(sups) - sups[0].dim
    return mixed_volume([lift_support(A, j) for A in sups])


def vol_union(supports: Sequence[PointsLike]) -> int:
    sups = _supports(supports)
    return hull(sups[0].union(*sups[1:])).volume


# --- face criteria ----------------------------------------------------------


def _deficient(family: Sequence[Sequence]) -> bool:
    """Some nonempty subfamily J has a Minkowski sum of dimension < |J|."""
    fam = [list(s) for s in family]
    for size in range(1, len(fam) + 1):
        for sub in combinations(fam, size):
            dirs = [tuple(x - y for x, y in zip(p, s[0])) for s in sub for p in s[1:]]
            if (linalg.rank(dirs) if dirs else 0) < size:
                return True
    return False


def proper_collections(sets: Sequence[PointsLike]) -> list[CoherentCollection]:
    """Coherent collections other than the one made of the whole sets."""
    return [F for F in enumerate_coherent_collections(sets) if not F.is_trivial()]


def _trace(B: SupportSet, F: CoherentCollection, i: int) -> tuple:
    """Points of B on the face of conv(B'_i) cut out by F's witness direction."""
    w = F.witness_alpha
    m = linalg.dot(w, F.faces[i].points[0])
    return tuple(b for b in B.points if linalg.dot(w, b) == m)


@dataclass
class DropCriteria:
    mv_B: int
    mv_Bp: int
    witnesses_ii: list[CoherentCollection]
    witnesses_iii: list[CoherentCollection]

    @property
    def i(self) -> bool:
        return self.mv_B < self.mv_Bp

    @property
    def ii(self) -> bool:
        return bool(self.witnesses_ii)

    @property
    def iii(self) -> bool:
        return bool(self.witnesses_iii)

    @property
    def agree(self) -> bool:
        return self.i == self.ii == self.iii

    def __iter__(self) -> Iterator[bool]:
        return iter((self.i, self.ii, self.iii))


def _good_collections(B: Sequence[SupportSet], collections):
    """Collections whose nonempty traces B_i cap F_i form an empty or essential family."""
    out = []
    for F in collections:
        traces = [t for t in (_trace(b, F, i) for i, b in enumerate(B)) if t]
        if not traces or is_essential(traces):
            out.append(F)
    return out


def check_mixed_volume_drop(B: Sequence[PointsLike], Bp: Sequence[PointsLike]) -> DropCriteria:
    B, Bp = _supports(B), _supports(Bp)
    if len(B) != len(Bp):
        raise ValueError("B and B' must have the same length")
    for b, bp in zip(B, Bp):
        if not all(in_hull(bp, p) for p in b.points):
            raise ValueError(f"{b} is not contained in conv{bp}")
    colls = proper_collections(Bp)
    wii = []
    for F in colls:
        fam = [f if _trace(b, F, i) else bp for i, (b, bp, f) in enumerate(zip(B, Bp, F.faces))]
        if is_essential(fam):
            wii.append(F)
    wiii = _good_collections(B, colls)
    return DropCriteria(mixed_volume(B), mixed_volume(Bp), wii, wiii)


def _faces_of_union(sets: Sequence[SupportSet]) -> list[SupportSet]:
    U = sets[0].union(*sets[1:])
    return [F.faces[0] for F in enumerate_coherent_collections([U])]


@dataclass
class UnionVolumeCriteria:
    i: bool
    ii: bool
    iii: bool

    @property
    def agree(self) -> bool:
        return self.i == self.ii == self.iii

    def __iter__(self):
        return iter((self.i, self.ii, self.iii))


def check_union_volume(B: Sequence[PointsLike]) -> UnionVolumeCriteria:
    """Three equivalent tests for MV(B_1, ..., B_k) = vol(conv(U B_i)) in Z^k."""
    B = _supports(B)
    k = B[0].dim
    U = B[0].union(*B[1:])
    bi = mixed_volume(B) == hull(U).volume
    faces = _faces_of_union(B)
    bii = True
    for F in faces:
        r = k - affine_dim(F)
        if 1 <= r <= k:
            hits = sum(1 for b in B if b.intersection(F))
            if hits < k + 1 - r:
                bii = False
                break
    biii = True
    for F in faces:
        if len(F) == len(U):
            continue
        traces = [t for t in (b.intersection(F) for b in B) if t]
        if not traces or not _deficient(traces):
            biii = False
            break
    return UnionVolumeCriteria(bi, bii, biii)


def _hyper_check(sups, I):
    n = len(sups) - 1
    d = sups[0].dim
    if d != n - 1:
        raise ValueError(f"this criterion needs d = n - 1, got d={d}, n={n}")
    I = sorted(set(I))
    if len(I) != n - 1:
        raise ValueError(f"|I| must be {n - 1}")
    return I


def hull_face_condition(supports: Sequence[PointsLike], I: Sequence[int]) -> bool:
    """Every codim-r face of conv(U A_j) meets the union of any r+2 supports containing I^c."""
    sups = _supports(supports)
    I = _hyper_check(sups, I)
    n, d = len(sups) - 1, sups[0].dim
    Ic = [j for j in range(n + 1) if j not in I]
    for F in _faces_of_union(sups):
        r = d - affine_dim(F)
        if not 1 <= r <= d:
            continue
        fset = set(F.points)
        rest = [j for j in range(n + 1) if j not in Ic]
        for extra in combinations(rest, r):
            J = Ic + list(extra)
            if not any(p in fset for j in J for p in sups[j].points):
                return False
    return True


def check_hull_equals_dI(supports: Sequence[PointsLike], I: Sequence[int]) -> bool:
    """Face criterion for vol(conv(U A_j)) = d_I; both sides are computed and must agree."""
    cond = hull_face_condition(supports, I)
    lhs = vol_union(supports) == d_I(supports, I)
    if cond != lhs:
        raise InvariantViolation(f"face criterion says {cond} but vol == d_I is {lhs} for I={sorted(I)}")
    return cond


def no_good_collection(B: Sequence[PointsLike], Bp: Sequence[PointsLike]) -> bool:
    """For every proper collection F of Bp, the nonempty traces B_i cap F_i are deficient."""
    B, Bp = _supports(B), _supports(Bp)
    for F in proper_collections(Bp):
        traces = [t for t in (_trace(b, F, i) for i, b in enumerate(B)) if t]
        if not traces or not _deficient(traces):
            return False
    return True


@dataclass
class LiftEqualityReport:
    I: tuple[int, ...]
    hypothesis: bool
    d_I: int
    mv_I: int
    mv_lift: int

    @property
    def conclusion(self) -> bool:
        return self.mv_lift == self.d_I == self.mv_I


def lift_equality_report(supports: Sequence[PointsLike], I: Sequence[int], lift: int | None = None) -> LiftEqualityReport:
    sups = _supports(supports)
    I = _hyper_check(sups, I)
    B = [sups[i] for i in I]
    Bp = [build_AiI(sups, i, I) for i in I]
    lift = mv_lift(sups) if lift is None else lift
    return LiftEqualityReport(tuple(I), no_good_collection(B, Bp), mixed_volume(Bp), mixed_volume(B), lift)


def check_lift_equals_dI(supports: Sequence[PointsLike], I: Sequence[int]) -> bool:
    """Sufficient face condition for deg(S) * deg(f) = d_I."""
    sups = _supports(supports)
    I = _hyper_check(sups, I)
    return no_good_collection([sups[i] for i in I], [build_AiI(sups, i, I) for i in I])


# --- the chain --------------------------------------------------------------


@dataclass
class DegreeReport:
    mv_lift: int
    deg_f: int
    d_I_table: dict[tuple[int, ...], int]
    vol_union: int
    hull_criterion: dict[tuple[int, ...], bool] = field(default_factory=dict)
    lift_criterion: dict[tuple[int, ...], LiftEqualityReport] = field(default_factory=dict)

    @property
    def deg_S(self) -> int:
        return self.mv_lift // self.deg_f

    @property
    def min_dI(self) -> int:
        return min(self.d_I_table.values())

    @property
    def max_dI(self) -> int:
        return max(self.d_I_table.values())

    @property
    def chain_flags(self) -> dict[str, bool]:
        """Which of the three inequalities are equalities."""
        return {
            "lift=min": self.mv_lift == self.min_dI,
            "min=max": self.min_dI == self.max_dI,
            "max=vol": self.max_dI == self.vol_union,
        }

    def chain_text(self) -> str:
        ops = ["=" if f else "<" for f in self.chain_flags.values()]
        return f"{self.mv_lift} {ops[0]} {self.min_dI} {ops[1]} {self.max_dI} {ops[2]} {self.vol_union}"


def degree_chain(supports: Sequence[PointsLike], deg_f: int = 1,
                 subsets: Sequence[Sequence[int]] | None = None,
                 criteria: bool = True, threads: int = 1) -> DegreeReport:
    sups = _supports(supports)
    d, n = sups[0].dim, len(sups) - 1
    if d > n:
        raise ValueError(f"need d <= n, got d={d}, n={n}")
    if deg_f < 1:
        raise ValueError("deg_f must be positive")
    lift = mv_lift(sups)
    if lift % deg_f:
        raise IntegralityViolation(f"deg(S) = {Fraction(lift, deg_f)} is not an integer; check deg_f")
    Is = [tuple(sorted(I)) for I in subsets] if subsets else list(combinations(range(n + 1), d))
    if threads > 1 and len(Is) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            vals = list(ex.map(d_I, [sups] * len(Is), Is))
    else:
        vals = [d_I(sups, I) for I in Is]
    table = dict(zip(Is, vals))
    rep = DegreeReport(lift, deg_f, table, vol_union(sups))
    if not (rep.mv_lift <= rep.min_dI <= rep.max_dI <= rep.vol_union):
        raise InvariantViolation(f"degree chain violated: {rep.chain_text()}")
    if criteria and d == n - 1:
        for I in Is:
            rep.hull_criterion[I] = check_hull_equals_dI(sups, I)
            rep.lift_criterion[I] = lift_equality_report(sups, I, lift)
    return rep
