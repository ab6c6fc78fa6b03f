"""
Spiders against the complement of a cycle
=========================================

Run every spider on n vertices against the complement of the n-cycle and
compare with the closed-form rule. Spiders with two legs are paths and sit
outside the rule, so they are printed separately.
"""

from fsgraphs.engine import FsInstance, fs_is_connected
from fsgraphs.families import cycle, spider, spider_signatures
from fsgraphs.graph import complement
from fsgraphs.theorems import predicted_cycle_connected

for n in range(4, 9):
    ybar = complement(cycle(n))
    row = []
    for sig in spider_signatures(n):
        seen = fs_is_connected(FsInstance(spider(sig), ybar))
        tag = "" if sig.k <= 2 or seen == predicted_cycle_connected(sig.legs) else "  MISMATCH"
        row.append(f"{sig}={'C' if seen else 'D'}{tag}")
    print(f"n={n}: " + ", ".join(row))

# C marks a connected FS graph and D a disconnected one
