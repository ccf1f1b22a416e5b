"""Order at the origin of a generic sparse hypersurface image (d = n - 1).

For a tame family the order times deg(f) is

    MV(A_0^2, ..., A_n^2) - MV(A_1^1, ..., A_n^1),

and it is bounded below by the same first term minus the smallest
MV({A_i cup A_j}_{i != j}) over j in [n].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import fme, linalg
from .cones import ConeV, hcone_to_v
from .degree import lift_support, no_good_collection
from .exceptions import DimensionMismatch, IntegralityViolation, InvariantViolation
from .fan import CoherentCollection, _supports, enumerate_coherent_collections, is_essential
from .lattice import PointsLike, m_alpha
from .mixed_volume import mixed_volume


def _hyper(sups):
    d, n = sups[0].dim, len(sups) - 1
    if d != n - 1:
        raise ValueError(f"need d = n - 1, got d={d}, n={n}")
    return d, n


def J_alpha(supports: Sequence[PointsLike], alpha: Sequence) -> tuple[int, ...]:
    """Indices j whose m_alpha(A_j) is strictly below the largest m_alpha(A_i)."""
    sups = _supports(supports)
    d, _ = _hyper(sups)
    if len(alpha) != d:
        raise DimensionMismatch(f"alpha has length {len(alpha)}, expected {d}")
    ms = [m_alpha(A, alpha) for A in sups]
    top = max(ms)
    return tuple(j for j, m in enumerate(ms) if m < top)


@dataclass(frozen=True)
class TameWitness:
    alpha: tuple[int, ...]
    J: tuple[int, ...]
    collection: CoherentCollection


def _cells(F: CoherentCollection, n1: int, d: int):
    """Subcells of the open cone of F on which the argmax set M is constant.

    Yields (M, closure cone). On the cone of F the value m_alpha(A_i) is the
    linear form <alpha, p_i> for any p_i in F_i.
    """
    eqs, ineqs = F.normal_cone.hrep()
    p = [f.points[0] for f in F.faces]
    for mask in range(1, 1 << n1):
        M = [i for i in range(n1) if mask >> i & 1]
        rest = [j for j in range(n1) if j not in M]
        i0 = M[0]
        ceq = list(eqs) + [tuple(a - b for a, b in zip(p[i], p[i0])) for i in M[1:]]
        cin = list(ineqs) + [tuple(a - b for a, b in zip(p[i0], p[j])) for j in rest]
        if fme.solve(d, [(e, 0) for e in ceq], [(r, -1) for r in cin]) is None:
            continue
        yield tuple(M), hcone_to_v(ceq, cin, d)


def tame_witnesses(supports: Sequence[PointsLike]) -> list[TameWitness]:
    """Every cell where J_alpha is proper, not of size n, and its faces are essential."""
    sups = _supports(supports)
    d, n = _hyper(sups)
    out = []
    for F in enumerate_coherent_collections(sups):
        for M, cell in _cells(F, n + 1, d):
            J = tuple(j for j in range(n + 1) if j not in M)
            if not J or len(J) == n:
                continue
            if is_essential([F.faces[j] for j in J]):
                rep = linalg.primitive(cell.relint_point())
                out.append(TameWitness(rep, J, F))
    out.sort(key=lambda w: (w.alpha, w.J))
    return out


def is_tame(supports: Sequence[PointsLike]) -> tuple[bool, TameWitness | None]:
    """(tame, lexicographically smallest witness cell representative or None)."""
    wit = tame_witnesses(supports)
    return (not wit), (wit[0] if wit else None)


def _mv1(sups):
    return mixed_volume([lift_support(A, 1) for A in sups[1:]])


def _mv2(sups):
    return mixed_volume([lift_support(A, 2) for A in sups])


def union_mv(supports: Sequence[PointsLike], j: int) -> int:
    """MV({A_i cup A_j}_{i in [n], i != j})."""
    sups = _supports(supports)
    n = len(sups) - 1
    if not 1 <= j <= n:
        raise ValueError(f"j must lie in [1, {n}]")
    return mixed_volume([sups[i].union(sups[j]) for i in range(1, n + 1) if i != j])


def drop_mv(supports: Sequence[PointsLike], j: int) -> int:
    """MV(A_1, ..., A_n) with A_j left out."""
    sups = _supports(supports)
    return mixed_volume([sups[i] for i in range(1, len(sups)) if i != j])


def single_support_condition(supports: Sequence[PointsLike], j0: int) -> bool:
    sups = _supports(supports)
    _, n = _hyper(sups)
    if not 1 <= j0 <= n:
        raise ValueError(f"j0 must lie in [1, {n}]")
    idx = [i for i in range(1, n + 1) if i != j0]
    return no_good_collection([sups[i] for i in idx], [sups[i].union(sups[j0]) for i in idx])


def check_single_support(supports: Sequence[PointsLike], j0: int) -> bool:
    """Face condition at j0; when it holds the two MV identities it implies are verified."""
    sups = _supports(supports)
    ok = single_support_condition(sups, j0)
    if ok:
        a, b, c = _mv1(sups), union_mv(sups, j0), drop_mv(sups, j0)
        if not a == b == c:
            raise InvariantViolation(f"j0={j0}: MV(A^1)={a}, MV(unions)={b}, MV(drop)={c} should agree")
    return ok


@dataclass
class OrderReport:
    tame: bool
    witness_alpha: tuple[int, ...] | None
    witness_J: tuple[int, ...] | None
    mv2: int
    mv1: int
    min_union_mv: int
    deg_f: int = 1
    single_support_j0: int | None = None
    witnesses: list[TameWitness] = field(default_factory=list)

    @property
    def ord_times_deg(self) -> int:
        return self.mv2 - self.mv1

    @property
    def lower_bound(self) -> int:
        return self.mv2 - self.min_union_mv

    @property
    def ord(self) -> int:
        q, r = divmod(self.ord_times_deg, self.deg_f)
        if r:
            raise IntegralityViolation(f"ord = {Fraction(self.ord_times_deg, self.deg_f)} is not an integer")
        return q

    @property
    def status(self) -> str:
        return "OK" if self.tame else "NOT_TAME"


def order_at_origin(supports: Sequence[PointsLike], deg_f: int = 1, single_support: bool = True) -> OrderReport:
    """Order formula with tameness check; non-tame input still gets the formula value."""
    sups = _supports(supports)
    _, n = _hyper(sups)
    if deg_f < 1:
        raise ValueError("deg_f must be positive")
    wit = tame_witnesses(sups)
    rep = OrderReport(
        tame=not wit,
        witness_alpha=wit[0].alpha if wit else None,
        witness_J=wit[0].J if wit else None,
        mv2=_mv2(sups),
        mv1=_mv1(sups),
        min_union_mv=min(union_mv(sups, j) for j in range(1, n + 1)),
        deg_f=deg_f,
        witnesses=wit,
    )
    if rep.tame:
        if rep.ord_times_deg < 0 or rep.ord_times_deg < rep.lower_bound:
            raise InvariantViolation(f"order bound violated: {rep.ord_times_deg} vs lower bound {rep.lower_bound}")
        rep.ord  # integrality
        if single_support:
            for j0 in range(1, n + 1):
                if check_single_support(sups, j0):
                    rep.single_support_j0 = j0
                    break
    return rep
