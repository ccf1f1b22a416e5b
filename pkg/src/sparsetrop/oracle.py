"""Brute-force checkers, written independently of the main modules.

Nothing here imports the hull, cone or fan code; only plain integer and
Fraction arithmetic is shared. They are slow and meant for small inputs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import factorial, gcd
from typing import Sequence


def _as_list(A):
    pts = getattr(A, "points", A)
    return sorted({tuple(p) for p in pts})


def rank(rows) -> int:
    """Rank by Gaussian elimination over Fraction, column by column."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        best = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                best = i
                break
        if best is None:
            continue
        m[r], m[best] = m[best], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def det(mat) -> Fraction:
    m = [[Fraction(x) for x in r] for r in mat]
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            out = -out
        out *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return out


def _affine_rank(pts) -> int:
    return rank([[a - b for a, b in zip(p, pts[0])] for p in pts[1:]])


# --- volumes ----------------------------------------------------------------


def _orient(facet, p):
    q0 = facet[0]
    return det([[a - b for a, b in zip(q, q0)] for q in facet[1:]] + [[a - b for a, b in zip(p, q0)]])


def _full_dim_volume(pts) -> Fraction:
    """Normalized volume of a full-dimensional point set in Q^k.

    Beneath-beyond in reverse lexicographic order with determinant orientation
    tests; each new point adds one simplex per facet it can see.
    """
    k = len(pts[0])
    order = sorted(pts, reverse=True)
    start = [order[0]]
    for p in order[1:]:
        if _affine_rank(start + [p]) == len(start):
            start.append(p)
            if len(start) == k + 1:
                break
    centre = tuple(sum(Fraction(x) for x in col) / (k + 1) for col in zip(*start))
    boundary = {}
    for i in range(k + 1):
        f = tuple(start[:i] + start[i + 1:])
        boundary[f] = 1 if _orient(f, centre) > 0 else -1
    vol = abs(det([[a - b for a, b in zip(q, start[0])] for q in start[1:]]))
    for p in order:
        if p in start:
            continue
        seen = []
        for f, s in boundary.items():
            o = s * _orient(f, p)
            if o < 0:
                seen.append(f)
                vol += -o
        if not seen:
            continue
        edges = {}
        for f in seen:
            for r in combinations(f, k - 1):
                key = frozenset(r)
                edges[key] = (edges.get(key, (0, r))[0] + 1, r)
            del boundary[f]
        for cnt, r in edges.values():
            if cnt == 1:
                nf = tuple(r) + (p,)
                boundary[nf] = 1 if _orient(nf, centre) > 0 else -1
    return vol


def volume_bruteforce(P) -> int | Fraction:
    """d! times the Euclidean volume of conv(P); P is a Polytope or a point list."""
    verts = getattr(P, "vertices", P)
    pts = sorted({tuple(Fraction(x) for x in p) for p in verts})
    d = len(pts[0])
    if len(pts) <= d or _affine_rank(pts) < d:
        return 0
    v = _full_dim_volume(pts)
    return int(v) if v.denominator == 1 else v


def area2_monotone(points) -> int:
    """Twice the area of conv(points) in Z^2 (monotone chain + shoelace)."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) < 3:
        return 0

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    s = 0
    for i in range(len(ring)):
        x1, y1 = ring[i]
        x2, y2 = ring[(i + 1) % len(ring)]
        s += x1 * y2 - x2 * y1
    return abs(s)


def _sum_all(sets):
    acc = {tuple(0 for _ in sets[0][0])}
    for s in sets:
        acc = {tuple(a + b for a, b in zip(u, v)) for u in acc for v in s}
    return sorted(acc)


def mixed_volume_bruteforce(sets: Sequence[Sequence]) -> int:
    """Inclusion-exclusion over full Minkowski sums, rebuilt from scratch per subset.

    For d <= 2 the value is also computed by the direct formula and the two
    must agree.
    """
    sets = [_as_list(s) for s in sets]
    d = len(sets)
    total = Fraction(0)
    for size in range(1, d + 1):
        for sub in combinations(range(d), size):
            total += (-1) ** (d - size) * Fraction(volume_bruteforce(_sum_all([sets[i] for i in sub])))
    val = total / factorial(d)
    if val.denominator != 1:
        raise ArithmeticError(f"oracle mixed volume not integral: {val}")
    val = int(val)
    if d == 1:
        direct = max(p[0] for p in sets[0]) - min(p[0] for p in sets[0])
    elif d == 2:
        direct2 = (area2_monotone(_sum_all(sets)) - area2_monotone(sets[0]) - area2_monotone(sets[1]))
        direct = direct2 // 2 if direct2 % 2 == 0 else Fraction(direct2, 2)
    else:
        direct = val
    if direct != val:
        raise AssertionError(f"oracle routes disagree: {val} vs {direct}")
    return val


# --- lattices ---------------------------------------------------------------


def lattice_index_minors(gens) -> int:
    """Index in the saturation, as the gcd of the maximal nonzero minors."""
    rows = [list(g) for g in gens if any(g)]
    if not rows:
        return 1
    r = rank(rows)
    d = len(rows[0])
    g = 0
    for ri in combinations(range(len(rows)), r):
        for ci in combinations(range(d), r):
            m = det([[rows[i][j] for j in ci] for i in ri])
            g = gcd(g, int(m))
    return g


# --- faces and essential families ------------------------------------------


def _face(A, alpha):
    vals = [sum(Fraction(a) * x for a, x in zip(alpha, p)) for p in A]
    m = min(vals)
    return tuple(p for p, v in zip(A, vals) if v == m)


def faces_by_sampling(supports, resolution: int) -> list[tuple]:
    """Distinct face tuples seen over all integer directions in [-r, r]^d (and 0)."""
    supports = [_as_list(s) for s in supports]
    d = len(supports[0][0])
    seen = set()
    for alpha in product(range(-resolution, resolution + 1), repeat=d):
        g = 0
        for x in alpha:
            g = gcd(g, x)
        if g > 1:
            continue
        seen.add(tuple(_face(A, alpha) for A in supports))
    return sorted(seen)


def essential_bruteforce(family) -> bool:
    """Every subfamily J with |J| <= d has a Minkowski sum of dimension >= |J|."""
    fam = [_as_list(s) for s in family]
    d = len(fam[0][0])
    for size in range(1, min(len(fam), d) + 1):
        for sub in combinations(fam, size):
            # the sum's direction space is spanned by the union of the directions
            dirs = [[a - b for a, b in zip(p, s[0])] for s in sub for p in s[1:]]
            if rank(dirs) < size:
                return False
    return True
