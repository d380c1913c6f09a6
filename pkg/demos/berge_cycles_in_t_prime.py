"""Berge cycles and paths in the 7-vertex block T'.

T' is three edges through vertex 0 plus one rim edge. It contains a
Berge triangle but no Berge 4-cycle, and adding any linear edge to it
closes a 4-cycle. This walks through those facts with the library.
"""

from linsat.berge import find_berge_cycle, find_berge_path, is_berge_path_connected
from linsat.constructions import t_prime
from linsat.hypercore import candidate_edges, shadow_graph
from linsat.saturation import is_saturated

H = t_prime()
print("T':", [list(e) for e in H.edges])

# the shadow replaces every edge by a triangle
S = shadow_graph(H)
print(f"shadow graph: {len(S.edges)} edges from {H.m} hyperedges")

triangle = find_berge_cycle(H, 3)
print("Berge-C_3:", triangle)
print("Berge-C_4:", find_berge_cycle(H, 4))

# 1 and 3 are not adjacent, but a path of three edges joins them
print("P_3 from 1 to 3:", find_berge_path(H, 1, 3, 3))
print("P_3-connected:", is_berge_path_connected(H, 3)[0])

report = is_saturated(H, 4, collect_certificates=True)
print("verdict for C_4:", report.verdict.value)
for e in candidate_edges(H):
    print(f"  adding {list(e)} closes {report.certificates[e]}")
