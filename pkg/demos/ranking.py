"""
Ranking permutations
====================

States are stored as lexicographic ranks, so an arrangement of n people
costs one integer. Rank and unrank are inverse bijections onto 0..n!-1.
"""

from fsgraphs.perms import factorial, rank, swap_positions, unrank

n = 5
for r in (0, 1, 2, 60, factorial(n) - 1):
    p = unrank(r, n)
    print(r, p, rank(p))

# One FS move exchanges the labels at two positions
p = unrank(42, n)
q = swap_positions(p, 2, 4)
print(p, "->", q, "rank", rank(p), "->", rank(q))
