"""Walk through the three edge curvatures on a small worked example.

The 8-vertex graph below is wired so that edge (1, 2) sits in exactly two
short cycles: the square 1-2-3-4 and the triangle 1-2-5. That makes every
quantity easy to check by hand.
"""

import netcurv as nc

EDGES = """
1 2
1 4
1 5
1 6
2 3
2 5
2 7
2 8
3 4
7 8
"""

g = nc.parse_edge_list(EDGES)
e = (1, 2)
print(f"graph: {g.num_vertices} vertices, {g.num_edges} edges")
print(f"deg(1) = {g.degree(1)}, deg(2) = {g.degree(2)}")

# Plain Forman curvature only sees the endpoint degrees.
print(f"\nFRC{e} = 4 - deg(1) - deg(2) = {nc.frc(g, e)}")

# The augmented version also counts the short cycles through the edge and
# how they travel relative to every other edge.
census = nc.build_census(g, max_len=4)
print(f"\ncycles of length <= 4: {census.cycles()}")
print(f"cycles through {e}: {census.cycle_count(e)}")
print(f"edges sharing a cycle with {e}: {sorted(census.shared_neighbors(e))}")
print(f"non-touching partners (aligned, unaligned): {census.nonadjacent_pairs(e)}")
print(f"AFRC4{e} = {nc.afrc(g, census, e)}")

# Alignment: both edges walked from the smaller to the larger vertex?
print(f"\n(1,2) vs (3,4) in square 1-2-3-4: aligned = {nc.aligned((1, 2, 3, 4), (1, 2), (3, 4))}")
print(f"(1,2) vs (1,4) in square 1-2-3-4: aligned = {nc.aligned((1, 2, 3, 4), (1, 2), (1, 4))}")

# Ollivier-Ricci compares the neighbor distributions of the endpoints.
mu = nc.neighbor_measure(g, 1)
print(f"\nneighbor measure at vertex 1: {dict(zip(mu.support, mu.mass))}")
print(f"ORC{e} = {nc.orc(g, e):+.4f}")

print("\nall three curvatures side by side:")
fr, af4, orc = nc.frc_all(g), nc.afrc_all(g, 4), nc.orc_all(g)
for edge in g.edges:
    print(f"  {edge}: FRC {fr[edge]:+4.0f}  AFRC4 {af4[edge]:+4.0f}  ORC {orc[edge]:+.3f}")

# Deleting the triangle edge (2, 5) removes one of the two cycles.
census2, affected = nc.delete_edge_from_census(census, (2, 5))
print(f"\nafter deleting (2, 5): affected edges {sorted(affected)}")
print(f"cycles through {e} now: {census2.cycle_count(e)}")
g2 = nc.remove_edge(g, (2, 5))
print(f"AFRC4{e} now: {nc.afrc(g2, census2, e)}")
