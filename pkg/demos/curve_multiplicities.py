"""Multiplicities for a plane curve whose parametrization has degree 2.

    f0 = x^3 + 3x,  f1 = x^5 + 5x^3,  f2 = x^5 + 22x^3 + 17x

The map f factors as rho . F with F = (f0, f1, f2). Multiplicities on the image
of F are computed first and then pushed down along A(w0, w1, w2) = (w1 - w0, w2 - w0).

Run with:  python demos/curve_multiplicities.py
"""

from sparsetrop import multiplicities

supports = [[(1,), (3,)], [(3,), (5,)], [(1,), (3,), (5,)]]

total = [0, 0]
for mc, rep in multiplicities(supports, deg_F=1, deg_rho=2):
    (ray,) = mc.rays
    print(f"ray {ray}: m_w = {rep.m_w}")
    for p in rep.preimages:
        v = ", ".join(str(x) for x in p.v)
        print(f"    v = ({v})   m_v = {p.m_v}   index = {p.index}")
    total = [t + rep.m_w * r for t, r in zip(total, ray)]

# the weighted primitive rays must balance
print("weighted sum of rays:", tuple(total))
