"""
Completeness, girth and diameter
================================

Metrics of the extended graph of R ⋈ I on a few small instances.
"""

import math

from zdlab import diameter, girth, is_complete
from zdlab.harness import Instance, expected_girth

rows = [("Z4", "2"), ("Z8", "4"), ("Z4", "1"), ("Z6", "2"), ("Z3", "1"), ("Z2", "1"),
        ("Z2 x Z2 x Z2", "(1, 1, 0)")]

print(f"{'instance':26}{'|V|':>5}{'|E|':>6}{'complete':>10}{'diam':>6}{'girth':>7}{'predicted':>11}")
for ring_text, ideal_text in rows:
    inst = Instance.from_specs(ring_text, ideal_text)
    g = inst.gammabar_s
    fmt = lambda x: "inf" if x == math.inf else str(x)
    print(f"{inst.spec:26}{len(g):>5}{g.edge_count:>6}{str(is_complete(g)):>10}"
          f"{fmt(diameter(g)):>6}{fmt(girth(g)):>7}{fmt(expected_girth(inst)):>11}")

# Z4 ⋈ Z4 is not complete: (1, 0) and (2, 0) are not adjacent
inst = Instance.from_specs("Z4", "1")
S = inst.amalgam
print("(1,0) ~ (2,0):", inst.gammabar_s.adjacent(S.index_of(1, 0), S.index_of(2, 0)))
