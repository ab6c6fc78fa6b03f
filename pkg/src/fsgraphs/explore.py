"""Family patterns for sweeping FS(X, Y) over many small instances.

A pattern names a whole family at each vertex count: ``spider``, ``spycle``
(at least one cycle), ``spycle1`` (exactly one cycle), ``tad``, ``path``,
``cycle``, ``star``, ``fruit``, ``grid``; ``comp(<pattern>)`` takes
complements. Anything else is parsed as a single graph spec and used only at
its own vertex count. The empty pattern matches nothing.
"""

from __future__ import annotations

import csv
import re

from .engine import EngineConfig, FsInstance, fs_components
from .errors import FSError
from .families import (
    cycle,
    fruit,
    grid,
    path,
    spider,
    spider_signatures,
    spycle,
    spycle_signatures,
    star,
    tadpole,
)
from .graph import complement
from .specs import graph_from_spec, parse_spec

CSV_HEADER = ["x_spec", "y_spec", "n", "connected", "num_components", "largest_component"]


def _spycle_text(sig) -> str:
    return "spycle({};{})".format(",".join(map(str, sig.legs)), ",".join(map(str, sig.cycles)))


def _base_family(name: str, n: int) -> list:
    if name == "spider":
        return [(str(s), spider(s)) for s in spider_signatures(n)]
    if name in ("spycle", "spycle1"):
        max_cycles = 1 if name == "spycle1" else None
        return [(_spycle_text(s), spycle(s)) for s in spycle_signatures(n, 1, max_cycles)]
    if name == "tad":
        return [(f"tad({c},{n - c})", tadpole(c, n - c)) for c in range(3, n + 1)]
    if name == "path" and n >= 1:
        return [(f"path({n})", path(n))]
    if name == "cycle" and n >= 3:
        return [(f"cycle({n})", cycle(n))]
    if name == "star" and n >= 2:
        return [(f"star({n})", star(n))]
    if name == "fruit" and n >= 4:
        return [(f"fruit({n})", fruit(n))]
    if name == "grid":
        return [(f"grid({r},{n // r})", grid(r, n // r)) for r in range(1, n + 1)
                if n % r == 0 and r <= n // r]
    return []


NAMED = {"spider", "spycle", "spycle1", "tad", "path", "cycle", "star", "fruit", "grid"}


def pattern_instances(pattern: str, n: int) -> list:
    """``(spec_text, graph)`` pairs on exactly ``n`` vertices."""
    pattern = pattern.strip()
    if not pattern:
        return []
    m = re.fullmatch(r"comp\((.*)\)", pattern)
    if m and (m.group(1).strip() in NAMED or m.group(1).strip().startswith("comp(")):
        return [(f"comp({t})", complement(g)) for t, g in pattern_instances(m.group(1), n)]
    if pattern in NAMED:
        return _base_family(pattern, n)
    g = graph_from_spec(pattern)
    return [(parse_spec(pattern).text(), g)] if g.n == n else []


def sweep(x_pattern: str, y_pattern: str, n_min: int, n_max: int, cfg=None, on_error=None):
    """Yield one CSV-ready row per (X, Y) pair with matching vertex count."""
    cfg = cfg or EngineConfig()
    for n in range(n_min, n_max + 1):
        ys = pattern_instances(y_pattern, n)
        if not ys:
            continue
        for xt, x in pattern_instances(x_pattern, n):
            for yt, y in ys:
                try:
                    s = fs_components(FsInstance(x, y), cfg)
                except FSError as exc:
                    if on_error:
                        on_error(xt, yt, exc)
                    yield [xt, yt, n, "error", "", ""]
                    continue
                yield [xt, yt, n, str(s.connected).lower(), s.num_components, s.largest]


def write_csv(rows, stream):
    writer = csv.writer(stream, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row)
