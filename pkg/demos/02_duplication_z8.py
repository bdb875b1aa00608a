"""
The duplication Z8 ⋈ {0, 4}
===========================

Build the ring of pairs (r, r + i), cover its zero divisors by the four T
sets, and compare the classic and extended zero-divisor graphs.
"""

from zdlab import build_amalgamation, classic_graph, extended_graph, ideal_generate, ZMod
from zdlab.amalgam import t_partition
from zdlab.export import to_dot
from zdlab.idealalg import zero_divisor_set
from zdlab.zdgraph import extra_edges

ring = ZMod(8)
ideal = ideal_generate(ring, [4])
dup = build_amalgamation(ring, ideal)
print(f"|R⋈I| = {dup.size}")

# the four T sets and their union
parts = t_partition(dup)
for name in ("t1", "t2", "t3", "t4"):
    print(name.upper(), sorted(dup.label(k) for k in getattr(parts, name)))
print("union equals Z(R⋈I):", parts.union == zero_divisor_set(dup))

# the extended graph picks up edges through powers
g, gbar = classic_graph(dup), extended_graph(dup)
print(f"classic: {len(g)} vertices, {g.edge_count} edges")
print(f"extended: {len(gbar)} vertices, {gbar.edge_count} edges")
for u, v in extra_edges(g, gbar):
    print("  extra edge", dup.label(u), "--", dup.label(v), "exponents", gbar.witness(u, v))

# graphviz text, ready for `dot -Tpng`
print(to_dot(gbar))
