"""Exact linear saturation and extremal numbers for tiny instances.

Exhaustive search over isomorphism classes (canonical augmentation) finds
the least and greatest edge counts among Berge-C_t-saturated linear
3-graphs, side by side with the closed-form values where they apply.
"""

from linsat.bounds import sat_c3_exact, sat_c4_upper, sat_lower
from linsat.errors import OutOfDomain
from linsat.oracle import Budget, brute_force_ex, brute_force_sat
from linsat.textio import format_text


def closed_form(n, t):
    try:
        if t == 3:
            return sat_c3_exact(n, 3).integer_bound
        return sat_c4_upper(n).integer_bound
    except OutOfDomain:
        return None


budget = Budget(max_seconds=60)
for t in (3, 4):
    print(f"Berge-C_{t}")
    print(f"{'n':>3} {'sat':>4} {'ex':>4} {'lower':>6} {'closed':>7}")
    for n in range(3, 11):
        sat = brute_force_sat(n, 3, t, budget)
        ex = brute_force_ex(n, 3, t, budget)
        print(f"{n:>3} {sat.optimum:>4} {ex.optimum:>4} {sat_lower(n, 3, t).integer_bound:>6} {str(closed_form(n, t)):>7}")

# two disjoint triples leave no room for a linear edge, so they are saturated
w = brute_force_sat(6, 3, 4).witness
print("smallest C_4-saturated 6-vertex witness:")
print(format_text(w), end="")
