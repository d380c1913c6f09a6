"""Berge-C_4-saturated linear 3-graphs on n vertices.

The construction glues floor((n-1)/18) copies of the 19-vertex block T*
and one small residue gadget at a common vertex. This script builds it
for a range of n, verifies saturation and compares the edge count with
the closed-form upper bound and the general lower bound.
"""

from linsat.bounds import sat_c4_upper, sat_lower
from linsat.constructions import c4_family, t_star
from linsat.saturation import is_saturated

T = t_star()
print(f"T*: {T.n} vertices, {T.m} edges, degree of 0 = {T.degree(0)}")

print(f"{'n':>3} {'edges':>5} {'upper':>5} {'lower':>5}  verdict")
for n in range(3, 41):
    H = c4_family(n)
    verdict = is_saturated(H, 4).verdict.value
    upper = sat_c4_upper(n).integer_bound
    lower = sat_lower(n, 3, 4).integer_bound
    flag = "" if H.m == upper else "  <- one more edge than the closed form"
    print(f"{n:>3} {H.m:>5} {upper:>5} {lower:>5}  {verdict}{flag}")
