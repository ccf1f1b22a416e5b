"""A surface in (C*)^3 parametrized by four generic polynomials in two variables.

    f0 = 1
    f1 = a1 x^2 + b1 y^2 + x^3
    f2 = a2 y^2 + b2 x^2 + y^3
    f3 = x y + a3 x^3 + b3 x^2 y + c3 x y^2 + d3 y^3

Run with:  python demos/surface_walkthrough.py
"""

from sparsetrop import (build_tropicalization, degree_chain, enumerate_coherent_collections,
                        multiplicities, order_at_origin)

supports = [
    [(0, 0)],
    [(2, 0), (0, 2), (3, 0)],
    [(0, 2), (2, 0), (0, 3)],
    [(1, 1), (3, 0), (2, 1), (1, 2), (0, 3)],
]

# Coherent collections = cones of the normal fan of A0 + A1 + A2 + A3.
colls = enumerate_coherent_collections(supports)
print(f"{len(colls)} coherent face collections")

# Each collection F and each index set J it is adapted to gives one cone C_J^F.
cones = build_tropicalization(supports, colls)
print(f"{len(cones)} distinct cones C_J^F, top dimension {max(c.dim for c in cones)}")

# Glue the top pieces into maximal cones and weigh each one.
print("\nmaximal cones and multiplicities")
for mc, rep in multiplicities(supports):
    print(f"  {str(mc.rays):<32} m = {rep.m_w}")

# The weights are the edge lengths of the Newton polytope of the implicit
# equation: 9 on the far triangle, 4 on the near one, 5 in between.

rep = degree_chain(supports)
print(f"\ndegree chain: {rep.chain_text()}  so deg(S) = {rep.deg_S}")

o = order_at_origin(supports)
print(f"tame: {o.tame}; ord * deg(f) = {o.mv2} - {o.mv1} = {o.ord_times_deg}; ord = {o.ord}")
print(f"lower bound {o.lower_bound}; single-support condition at j0 = {o.single_support_j0}")

