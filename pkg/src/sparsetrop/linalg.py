"""Exact linear algebra over Z and Q.

Vectors are tuples, matrices are lists of rows. Nothing here touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

Vector = Sequence
Matrix = Sequence[Sequence]


def dot(u: Vector, v: Vector):
    return sum(a * b for a, b in zip(u, v))


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else 0


def primitive(v: Vector) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector pointing the same way.

    The zero vector is returned unchanged (as integers).
    """
    fr = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def sign_normalized(v: tuple[int, ...]) -> tuple[int, ...]:
    """Flip ``v`` so its first nonzero coordinate is positive."""
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def rref(rows: Matrix, ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _rank_int(rows: Matrix) -> int:
    # fraction-free elimination; rows are divided by their content to keep entries small
    m = [list(r) for r in rows]
    r = 0
    for c in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                row = [p * a - f * b for a, b in zip(m[i], m[r])]
                g = reduce(gcd, row, 0)
                m[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(m):
            break
    return r


def rank(rows: Matrix) -> int:
    if not rows:
        return 0
    if all(type(x) is int for row in rows for x in row):
        return _rank_int(rows)
    return len(rref(rows)[1])


def nullspace(rows: Matrix, ncols: int) -> list[tuple[Fraction, ...]]:
    """Rational basis of {x : rows . x = 0}."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def integer_nullspace(rows: Matrix, ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer vectors spanning {x : rows . x = 0} over Q."""
    return [primitive(v) for v in nullspace(rows, ncols)]


def canonical_subspace_basis(vectors: Iterable[Vector], ncols: int) -> tuple[tuple[int, ...], ...]:
    """Canonical integer basis of span(vectors): RREF rows made primitive."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return ()
    red, _ = rref(vecs, ncols)
    return tuple(primitive(r) for r in red)


def solve(rows: Matrix, rhs: Vector) -> tuple[Fraction, ...] | None:
    """One rational solution of rows . x = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return tuple(x)


def in_span(v: Vector, basis: Sequence[Vector]) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [v]) == rank(basis)


def project_out(v: Vector, basis: Sequence[Vector]) -> tuple[Fraction, ...]:
    """Orthogonal projection of ``v`` onto the complement of span(basis)."""
    v = [Fraction(x) for x in v]
    if not basis:
        return tuple(v)
    red, _ = rref(basis, len(v))
    # Gram-Schmidt on the echelon basis, exact.
    ortho: list[list[Fraction]] = []
    for b in red:
        w = list(b)
        for q in ortho:
            c = dot(w, q) / dot(q, q)
            w = [a - c * e for a, e in zip(w, q)]
        ortho.append(w)
    for q in ortho:
        c = dot(v, q) / dot(q, q)
        v = [a - c * e for a, e in zip(v, q)]
    return tuple(v)


def det_bareiss(mat: Matrix) -> int:
    """Integer determinant by fraction-free elimination."""
    m = [list(r) for r in mat]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def cofactor_normal(vectors: Sequence[Sequence[int]], dim: int) -> tuple[int, ...]:
    """Generalized cross product of ``dim - 1`` integer vectors in Z^dim.

    Component i is (-1)^i times the minor obtained by deleting column i, so that
    ``dot(n, x) == det([*vectors, x])``.
    """
    out = []
    for i in range(dim):
        minor = [[row[j] for j in range(dim) if j != i] for row in vectors]
        s = 1 if (dim - 1 + i) % 2 == 0 else -1
        out.append(s * det_bareiss(minor))
    return tuple(out)


def _row_echelon_with_transform(mat: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Integer row echelon form H = U . mat with U unimodular."""
    m = [list(r) for r in mat]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if m[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[piv] = m[piv], m[r]
            u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, nrows):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [a - q * b for a, b in zip(m[i], m[r])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[r])]
                    if m[i][c]:
                        done = False
            if done:
                break
        if any(m[i][c] for i in range(r, nrows)):
            r += 1
    return m, u


def integer_kernel(mat: Matrix, ncols: int) -> list[tuple[int, ...]]:
    """Z-basis of the lattice {x in Z^ncols : mat . x = 0}."""
    if not mat:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    transposed = [[int(mat[i][j]) for i in range(len(mat))] for j in range(ncols)]
    h, u = _row_echelon_with_transform(transposed)
    return [tuple(u[i]) for i in range(ncols) if not any(h[i])]


def saturated_basis(vectors: Sequence[Vector], ncols: int) -> list[tuple[int, ...]]:
    """Z-basis of span(vectors) intersected with Z^ncols."""
    vecs = [primitive(v) for v in vectors if any(v)]
    if not vecs:
        return []
    perp = integer_nullspace(vecs, ncols)
    return integer_kernel(perp, ncols)


def smith_diagonal(mat: Matrix) -> list[int]:
    """Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix."""
    m = [[int(x) for x in r] for r in mat]
    if not m or not m[0]:
        return []
    nrows, ncols = len(m), len(m[0])
    diag = []
    t = 0
    while t < min(nrows, ncols):
        entries = [(abs(m[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if m[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            changed = False
            p = m[t][t]
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // p
                    m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                    if m[i][t]:
                        changed = True
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // p
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j]:
                        changed = True
            if not changed:
                # divisibility: every remaining entry must be a multiple of the pivot
                bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                            if m[i][j] % p), None)
                if bad is None:
                    break
                m[t] = [a + b for a, b in zip(m[t], m[bad[0]])]
                changed = True
            if changed:
                entries = [(abs(m[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols)
                           if m[i][j] and (i == t or j == t)]
                _, pi, pj = min(entries)
                m[t], m[pi] = m[pi], m[t]
                for row in m:
                    row[t], row[pj] = row[pj], row[t]
        diag.append(abs(m[t][t]))
        t += 1
    return diag


def lattice_index(gens: Sequence[Sequence[int]]) -> tuple[int, int]:
    """(index of the lattice spanned by ``gens`` in its saturation, rank)."""
    rows = [list(g) for g in gens if any(g)]
    if not rows:
        return 1, 0
    d = smith_diagonal(rows)
    out = 1
    for x in d:
        out *= x
    return out, len(d)
