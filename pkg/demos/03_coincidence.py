"""
When do the two graphs agree?
=============================

Whether the classic and extended graphs of R ⋈ I coincide can be read off
R and I: either the graphs of R agree and I kills Nil(R), or (when I sits
inside Nil(R)) the question reduces to R alone. Here we compute both sides.
"""

from zdlab.harness import Instance
from zdlab.harness import check_coincide_nil_theorem, check_coincidence_theorem

cases = [
    ("Z12", "2"),          # I kills Nil(R) but the graphs of R already differ
    ("Z2 x Z2", "(1, 0)"), # reduced: everything agrees
    ("Z4", "1"),           # graphs of R agree, I does not kill Nil(R)
    ("Z8", "4"),           # I nilpotent
]

for ring_text, ideal_text in cases:
    inst = Instance.from_specs(ring_text, ideal_text)
    for check in (check_coincidence_theorem, check_coincide_nil_theorem):
        v = check(inst)
        if v.skipped:
            print(f"{inst.spec:18} {v.statement_id:22} skipped ({v.skipped})")
            continue
        print(f"{inst.spec:18} {v.statement_id:22} left={v.witnesses['left']} "
              f"right={v.witnesses['right']} consistent={v.consistent}")
        extra = v.witnesses.get("extra_edge_S")
        if extra:
            print(" " * 19, "edge only in the extended graph:", extra)
