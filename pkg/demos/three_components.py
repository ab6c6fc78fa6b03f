"""
Three components of FS(Star_4, Tad_3,1)
=======================================

Four people sit on a star; the acquaintance graph is a triangle with a
pendant vertex. Count the components, then list the arrangements that can
be reached from the identity.
"""

from fsgraphs.engine import FsInstance, fs_component_of, fs_components
from fsgraphs.families import star, tadpole
from fsgraphs.perms import factorial, identity, unrank

inst = FsInstance(star(4), tadpole(3, 1))

# The union-find pass touches every one of the 4! arrangements once
summary = fs_components(inst)
print(summary.to_json())

# A bounded search from the identity fills one component
reach = fs_component_of(inst, identity(4))
print("identity reaches", reach.size, "arrangements:")
for r in range(factorial(4)):
    p = unrank(r, 4)
    if p in reach:
        print("  ", p)
