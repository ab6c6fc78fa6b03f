"""
Ten people and ten chairs
=========================

One instance with 3628800 arrangements, enough to see the engine's speed
and memory use. Pass 7 on the command line for the 11-vertex version,
about ten seconds over 39916800 arrangements.
"""

import resource
import sys
import time

from fsgraphs.engine import EngineConfig, FsInstance, fs_components
from fsgraphs.families import spider
from fsgraphs.graph import complement

k = int(sys.argv[1]) if len(sys.argv) > 1 else 6
x = spider((2, 2) + (1,) * (k - 1))
y = complement(spider((2, 2, 2) + (1,) * (k - 3)))
t0 = time.perf_counter()
summary = fs_components(FsInstance(x, y), EngineConfig(max_full_n=11))
peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
print(summary.to_json())
print(f"{time.perf_counter() - t0:.1f} s, peak RSS {peak:.0f} MiB")
