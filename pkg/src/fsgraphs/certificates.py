"""Sufficient certificates that FS(X, Y) is disconnected.

A cut-path certificate is a path ``x1 ... xd`` in X whose endpoints are cut
vertices of X, whose interior vertices all have degree 2 and whose edges are
all bridges of X, together with ``min_degree(Y) <= d``. A lone cut vertex
counts as ``d = 1``. Finding no certificate says nothing about connectivity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .engine import FsInstance
from .errors import ParameterError
from .families import SpiderLike, _as_spider
from .graph import (
    Graph,
    complement,
    cut_vertices,
    degrees,
    is_connected,
    max_degree,
    min_degree,
    num_components,
)

CUT_PATH = "cut-path"
DISCONNECTED_X = "disconnected-X"


@dataclass(frozen=True)
class DisconnectCertificate:
    path: tuple
    min_deg_y: int
    kind: str = CUT_PATH

    @property
    def d(self) -> int:
        return len(self.path)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "path": list(self.path), "d": self.d, "min_deg_y": self.min_deg_y}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _is_bridge(x: Graph, u: int, v: int) -> bool:
    cut = Graph.from_edges(x.n, [e for e in x.edges() if e != (min(u, v), max(u, v))])
    return num_components(cut) > num_components(x)


def check_certificate(cert: DisconnectCertificate, x: Graph, y: Graph) -> bool:
    """Re-derive every condition the certificate claims."""
    if cert.kind == DISCONNECTED_X:
        return x.n >= 2 and not is_connected(x)
    path = cert.path
    if not path or len(set(path)) != len(path):
        return False
    if any(not x.has_edge(u, v) for u, v in zip(path, path[1:])):
        return False
    cuts = cut_vertices(x)
    if path[0] not in cuts or path[-1] not in cuts:
        return False
    deg = degrees(x)
    if any(deg[v - 1] != 2 for v in path[1:-1]):
        return False
    if any(not _is_bridge(x, u, v) for u, v in zip(path, path[1:])):
        return False
    return cert.min_deg_y == min_degree(y) and cert.min_deg_y <= len(path)


def cut_paths(x: Graph) -> list:
    """Every qualifying path, in (first vertex, last vertex, length) order.

    Each path is listed from both ends, so callers see both orientations.
    """
    cuts = cut_vertices(x)
    deg = degrees(x)
    found = []
    for start in sorted(cuts):
        found.append((start,))
        for first in x.neighbors(start):
            if not _is_bridge(x, start, first):
                continue
            # a chain of degree-2 vertices hanging off a bridge is all bridges
            walk = [start, first]
            while True:
                tip = walk[-1]
                if tip in cuts:
                    found.append(tuple(walk))
                if deg[tip - 1] != 2:
                    break
                walk.append([w for w in x.neighbors(tip) if w != walk[-2]][0])
    return sorted(found, key=lambda p: (p[0], p[-1], len(p)))


def find_disconnect_certificate(inst: FsInstance) -> Optional[DisconnectCertificate]:
    x, y = inst.x, inst.y
    if x.n >= 2 and not is_connected(x):
        # labels can never cross between components of X
        return DisconnectCertificate((), min_degree(y), DISCONNECTED_X)
    delta = min_degree(y)
    for p in cut_paths(x):
        if delta <= len(p):
            return DisconnectCertificate(p, delta)
    return None


def claim_necessary_certificate(sig: SpiderLike, y: Graph) -> Optional[DisconnectCertificate]:
    """Certificate for a spider X whose complement-of-Y has max degree equal to
    the total length of all legs but the longest.

    The path runs from the center down the longest leg, stopping before the foot.
    """
    sig = _as_spider(sig)
    if y.n != sig.n:
        raise ParameterError(f"spider has {sig.n} vertices but Y has {y.n}")
    if sig.k < 2:
        raise ParameterError("the center must be a cut vertex, so at least two legs are needed")
    if max_degree(complement(y)) != sum(sig.legs[1:]):
        return None
    center = sig.n
    path = (center,) + tuple(range(1, sig.legs[0]))
    return DisconnectCertificate(path, min_degree(y))
