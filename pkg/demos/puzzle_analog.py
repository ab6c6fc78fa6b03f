"""
A 3x3 sliding puzzle
====================

With X a 3x3 grid and Y a star, the star's center acts as the blank tile:
it may trade places with any neighbour on the grid. Exactly half of the
362880 arrangements are reachable from any given one.
"""

import time

from fsgraphs.engine import FsInstance, fs_components, fs_same_component
from fsgraphs.families import grid, star
from fsgraphs.perms import identity, swap_positions

inst = FsInstance(grid(3, 3), star(9))
t0 = time.perf_counter()
summary = fs_components(inst)
print(summary.to_json(), f"{time.perf_counter() - t0:.2f} s")

# Swapping two numbered tiles without moving the blank flips the parity
start = identity(9)
swapped = swap_positions(start, 2, 3)
print("two tiles swapped is reachable:", fs_same_component(inst, start, swapped))

# Roles of X and Y can be exchanged without changing the component sizes
print(fs_components(FsInstance(star(9), grid(3, 3))).to_json())
