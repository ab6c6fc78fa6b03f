"""Small undirected simple graphs stored as per-vertex neighbor bitmasks.

Vertices are 1-based in every public function (``{1..n}``) and 0-based in the
bitmasks: bit ``j`` of ``adj[i]`` is set when vertices ``i+1`` and ``j+1`` are
adjacent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import GraphSizeError, ParameterError

MAX_VERTICES = 20


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphSizeError(f"graph has {self.n} vertices, limit is {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for i, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {i + 1} has a neighbor outside 1..{self.n}")
            if mask >> i & 1:
                raise ValueError(f"self-loop at vertex {i + 1}")
            for j in _bits(mask):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i + 1} and {j + 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise GraphSizeError(f"graph has {n} vertices, limit is {MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {{{u},{v}}} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << i) for i in range(n)))

    def edges(self) -> list:
        """Edges as 1-based ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(i + 1, j + 1) for i in range(self.n) for j in _bits(self.adj[i]) if j > i]

    @property
    def num_edges(self) -> int:
        return sum(_popcount(m) for m in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> list:
        return [j + 1 for j in _bits(self.adj[v - 1])]

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v - 1])

    def adjacency_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=np.bool_)
        for u, v in self.edges():
            mat[u - 1, v - 1] = mat[v - 1, u - 1] = True
        return mat

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        return cls.from_edges(data["n"], [tuple(e) for e in data["edges"]])

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~m & ~(1 << i) for i, m in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place ``h`` after ``g``; h's vertex ``v`` becomes ``g.n + v``."""
    if g.n + h.n > MAX_VERTICES:
        raise GraphSizeError(f"union has {g.n + h.n} vertices, limit is {MAX_VERTICES}")
    return Graph(g.n + h.n, g.adj + tuple(m << g.n for m in h.adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v`` and compact the remaining labels, preserving order."""
    if not 1 <= v <= g.n:
        raise ParameterError(f"vertex {v} out of range 1..{g.n}")
    i = v - 1
    low = (1 << i) - 1

    def squeeze(mask):
        return (mask & low) | ((mask >> (i + 1)) << i)

    return Graph(g.n - 1, tuple(squeeze(m) for k, m in enumerate(g.adj) if k != i))


def induced_subgraph(g: Graph, vertices: Iterable) -> Graph:
    keep = sorted(set(vertices))
    index = {v - 1: k for k, v in enumerate(keep)}
    adj = []
    for v in keep:
        mask = 0
        for j in _bits(g.adj[v - 1]):
            if j in index:
                mask |= 1 << index[j]
        adj.append(mask)
    return Graph(len(keep), tuple(adj))


def relabel(g: Graph, mapping: dict) -> Graph:
    """Apply a bijection ``old vertex -> new vertex`` (both 1-based)."""
    return Graph.from_edges(g.n, [(mapping[u], mapping[v]) for u, v in g.edges()])


def degrees(g: Graph) -> list:
    return [_popcount(m) for m in g.adj]


def min_degree(g: Graph) -> int:
    return min(degrees(g)) if g.n else 0


def max_degree(g: Graph) -> int:
    return max(degrees(g)) if g.n else 0


def _component_masks(adj, alive: int) -> list:
    comps = []
    remaining = alive
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            nxt = 0
            for j in _bits(frontier):
                nxt |= adj[j]
            frontier = nxt & alive & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def components(g: Graph) -> list:
    """Connected components as sorted lists of 1-based vertices."""
    return [[j + 1 for j in _bits(c)] for c in _component_masks(g.adj, (1 << g.n) - 1)]


def num_components(g: Graph) -> int:
    return len(_component_masks(g.adj, (1 << g.n) - 1))


def is_connected(g: Graph) -> bool:
    return num_components(g) <= 1


def cut_vertices(g: Graph) -> set:
    """Vertices whose removal increases the number of components."""
    full = (1 << g.n) - 1
    base = len(_component_masks(g.adj, full))
    return {
        i + 1
        for i in range(g.n)
        if len(_component_masks(g.adj, full & ~(1 << i))) > base
    }


def _refine_colors(graphs) -> list:
    """Joint colour refinement by iterated neighbour-colour multisets."""
    colors = [[_popcount(m) for m in g.adj] for g in graphs]
    while True:
        sigs = [
            [(c[i], tuple(sorted(c[j] for j in _bits(g.adj[i])))) for i in range(g.n)]
            for g, c in zip(graphs, colors)
        ]
        palette = {s: k for k, s in enumerate(sorted({s for gs in sigs for s in gs}))}
        new = [[palette[s] for s in gs] for gs in sigs]
        if len({x for c in new for x in c}) == len({x for c in colors for x in c}):
            return new
        colors = new


def find_isomorphism(g: Graph, h: Graph) -> Optional[dict]:
    """An edge-preserving bijection ``g -> h`` (1-based), or None."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(degrees(g)) != sorted(degrees(h)):
        return None
    cg, ch = _refine_colors([g, h])
    if sorted(cg) != sorted(ch):
        return None
    n = g.n
    class_size = {c: cg.count(c) for c in set(cg)}
    # rarest colour first, then prefer vertices attached to already-ordered ones
    order = []
    placed = 0
    pending = set(range(n))
    while pending:
        best = min(
            pending,
            key=lambda v: (-_popcount(g.adj[v] & placed), class_size[cg[v]], v),
        )
        order.append(best)
        placed |= 1 << best
        pending.remove(best)

    mapping = [-1] * n
    used = 0

    def extend(pos):
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used >> w & 1 or ch[w] != cg[v]:
                continue
            ok = True
            for u in order[:pos]:
                if (g.adj[v] >> u & 1) != (h.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(pos + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    if not extend(0):
        return None
    return {v + 1: mapping[v] + 1 for v in range(n)}


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def contains_subgraph(pattern: Graph, host: Graph) -> Optional[dict]:
    """Injective map of pattern vertices into host preserving every pattern edge.

    Non-induced containment: host may have extra edges among the images.
    Returns ``{pattern_vertex: host_vertex}`` (1-based) or None.
    """
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return None
    pdeg = degrees(pattern)
    hdeg = degrees(host)
    if any(a > b for a, b in zip(sorted(pdeg, reverse=True), sorted(hdeg, reverse=True))):
        return None

    # connected-first ordering keeps the candidate sets small
    order = []
    placed = 0
    pending = set(range(pattern.n))
    while pending:
        best = min(pending, key=lambda v: (-_popcount(pattern.adj[v] & placed), -pdeg[v], v))
        order.append(best)
        placed |= 1 << best
        pending.remove(best)

    deg_ok = [
        sum(1 << w for w in range(host.n) if hdeg[w] >= pdeg[v]) for v in range(pattern.n)
    ]
    mapping = [-1] * pattern.n
    host_full = (1 << host.n) - 1

    def extend(pos, used):
        if pos == pattern.n:
            return True
        v = order[pos]
        cand = deg_ok[v] & host_full & ~used
        for u in _bits(pattern.adj[v]):
            if mapping[u] >= 0:
                cand &= host.adj[mapping[u]]
        for w in _bits(cand):
            mapping[v] = w
            if extend(pos + 1, used | (1 << w)):
                return True
        mapping[v] = -1
        return False

    if not extend(0, 0):
        return None
    return {v + 1: mapping[v] + 1 for v in range(pattern.n)}


def check_embedding(pattern: Graph, host: Graph, mapping: dict) -> bool:
    """True when ``mapping`` is injective and carries every pattern edge to a host edge."""
    if sorted(mapping) != list(range(1, pattern.n + 1)):
        return False
    if len(set(mapping.values())) != pattern.n:
        return False
    if not all(1 <= w <= host.n for w in mapping.values()):
        return False
    return all(host.has_edge(mapping[u], mapping[v]) for u, v in pattern.edges())
