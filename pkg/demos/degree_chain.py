"""The four quantities bounding deg(S) * deg(f), on a family where every inequality is strict
and on a family with an equality criterion that certifies the smallest d_I.

Run with:  python demos/degree_chain.py
"""

from sparsetrop import check_lift_equals_dI, degree_chain
from sparsetrop.degree import lift_equality_report

strict = [[(1, 1)], [(0, 1), (0, 2), (1, 1)], [(1, 0), (2, 0), (1, 1)], [(1, 1), (3, 1), (1, 3)]]
rep = degree_chain(strict)
print("strict family")
print("  chain:", rep.chain_text())
for I, v in sorted(rep.d_I_table.items()):
    print(f"  d_{''.join(map(str, I))} = {v}")

# conv of the union is a hexagon of normalized area 11, while the lifted
# mixed volume (the actual degree for generic coefficients) is only 5


def square(k):
    h = k // 2
    return [[(0, 0), (1, 0), (0, 1), (h, h)], [(0, 0), (1, 0), (0, k)], [(0, 0), (k, 0), (0, 1)],
            [(0, 0), (1, 0), (0, 1), (h, h)]]


print("\nsquare family, I = {1, 2}")
for k in (2, 4, 6):
    S = square(k)
    r = lift_equality_report(S, (1, 2))
    print(f"  k = {k}: face condition {check_lift_equals_dI(S, (1, 2))}, d_I = {r.d_I}, deg(S) = {r.mv_lift}")
