"""Fourier-Motzkin elimination with witness recovery.

A constraint is a pair ``(coeffs, const)`` read as ``coeffs . x + const >= 0``
(or ``== 0`` for equations). All arithmetic is over Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

Constraint = tuple[tuple[Fraction, ...], Fraction]


def _normalize(coeffs, const) -> Constraint:
    vals = [Fraction(c) for c in coeffs] + [Fraction(const)]
    den = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in vals), 1)
    ints = [int(v * den) for v in vals]
    g = reduce(gcd, ints, 0) or 1
    ints = [i // g for i in ints]
    return tuple(Fraction(i) for i in ints[:-1]), Fraction(ints[-1])


def solve(nvars: int,
          eqs: Sequence[tuple[Sequence, object]] = (),
          ineqs: Sequence[tuple[Sequence, object]] = ()) -> tuple[Fraction, ...] | None:
    """Return a rational point satisfying every constraint, or None if infeasible."""
    eq_list = [([Fraction(c) for c in a], Fraction(b)) for a, b in eqs]
    in_list = {_normalize(a, b) for a, b in ineqs}

    # Equations: solve for one variable at a time and substitute.
    substitutions: list[tuple[int, list[Fraction], Fraction]] = []
    while eq_list:
        a, b = eq_list.pop()
        piv = next((i for i, c in enumerate(a) if c != 0), None)
        if piv is None:
            if b != 0:
                return None
            continue
        # x_piv = -(sum_{i != piv} a_i x_i + b) / a_piv
        cp = a[piv]
        expr = [-c / cp for c in a]
        expr[piv] = Fraction(0)
        econst = -b / cp
        substitutions.append((piv, expr, econst))

        def subst(coeffs, const):
            k = coeffs[piv]
            if k == 0:
                return list(coeffs), const
            new = [c + k * e for c, e in zip(coeffs, expr)]
            new[piv] = Fraction(0)
            return new, const + k * econst

        eq_list = [subst(c, k) for c, k in eq_list]
        in_list = {_normalize(*subst(c, k)) for c, k in in_list}

    fixed = {p for p, _, _ in substitutions}
    free = [i for i in range(nvars) if i not in fixed]

    stages: list[tuple[int, list[Constraint]]] = []
    current = set(in_list)
    for v in free:
        pos = [c for c in current if c[0][v] > 0]
        neg = [c for c in current if c[0][v] < 0]
        rest = {c for c in current if c[0][v] == 0}
        stages.append((v, pos + neg))
        for pa, pb in pos:
            for na, nb in neg:
                lp, ln = pa[v], -na[v]
                coeffs = tuple(ln * x + lp * y for x, y in zip(pa, na))
                const = ln * pb + lp * nb
                if not any(coeffs):
                    if const < 0:
                        return None
                    continue
                rest.add(_normalize(coeffs, const))
        current = rest
    for coeffs, const in current:
        if not any(coeffs) and const < 0:
            return None

    x = [Fraction(0)] * nvars
    for v, cons in reversed(stages):
        lo = hi = None
        for coeffs, const in cons:
            others = sum(c * x[i] for i, c in enumerate(coeffs) if i != v) + const
            bound = -others / coeffs[v]
            if coeffs[v] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            if lo > hi:
                return None
            x[v] = (lo + hi) / 2
        elif lo is not None:
            x[v] = lo
        elif hi is not None:
            x[v] = hi
    for piv, expr, econst in reversed(substitutions):
        x[piv] = sum(e * xi for e, xi in zip(expr, x)) + econst
    return tuple(x)


def feasible(nvars: int, eqs=(), ineqs=()) -> bool:
    return solve(nvars, eqs, ineqs) is not None
