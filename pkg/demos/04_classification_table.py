"""Compare the list-based classification with exhaustive computation over the catalog.

Run: python3 demos/04_classification_table.py [max_dim]
"""

import sys

from goodgroups.classifier import builtin_catalog, decide, theorem_classify

max_dim = int(sys.argv[1]) if len(sys.argv) > 1 else 26
print(f"{'group':18} {'order':>5}  {'classification':32} {'computed':8} {'dim W':>5} {'walked':>6}  time")
for e in sorted(builtin_catalog(), key=lambda e: (e.order, e.name)):
    g = e.build()
    c = theorem_classify(g)
    v = decide(g, max_dim=max_dim)
    agree = "" if v.tag == "Unknown" else ("ok" if c.good == (v.tag == "Good") else "MISMATCH")
    print(f"{e.name:18} {g.order:5}  {str(c):32} {v.tag:8} {'-' if v.kernel_dim is None else v.kernel_dim:>5} {'-' if v.enum_dim is None else v.enum_dim:>6}  {v.elapsed:6.2f}s {agree}")
