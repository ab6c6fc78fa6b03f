"""Friends-and-strangers graphs FS(X, Y) over all n! states, never materialized.

A state is a permutation ``p`` with ``p[a-1]`` the label (vertex of Y) sitting
on vertex ``a`` of X. States ``p`` and ``q`` are adjacent when ``q`` swaps the
labels across one X-edge whose two labels are adjacent in Y.

Full component counts use a union-find over lexicographic ranks; single-seed
queries use a breadth-first search with an n!-bit visited set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, ParameterError, ResourceError
from .graph import Graph
from .perms import factorial, is_permutation, rank, swap_positions

DEFAULT_MEMORY_LIMIT = 2 * 1024**3
BITSET_MAX_N = 12


@dataclass(frozen=True)
class FsInstance:
    x: Graph
    y: Graph

    def __post_init__(self):
        if self.x.n != self.y.n:
            raise ParameterError(
                f"X has {self.x.n} vertices but Y has {self.y.n}; they must match"
            )

    @property
    def n(self) -> int:
        return self.x.n


@dataclass(frozen=True)
class EngineConfig:
    """Limits for full enumeration and bounded search.

    ``thread_count`` is accepted for interface stability; the union-find pass
    runs on one thread, which makes results identical for every value.
    """

    max_full_n: int = 11
    memory_limit_bytes: int = DEFAULT_MEMORY_LIMIT
    thread_count: int = 1
    max_states: int = 50_000_000

    def __post_init__(self):
        if self.max_full_n < 1 or self.memory_limit_bytes < 1 or self.thread_count < 1:
            raise ValueError("engine limits must be positive")
        if self.max_full_n > BITSET_MAX_N and self.memory_limit_bytes <= DEFAULT_MEMORY_LIMIT:
            raise ValueError("max_full_n above 12 requires an explicitly raised memory limit")


@dataclass(frozen=True)
class ComponentSummary:
    n: int
    total: int
    num_components: int
    sizes: dict = field(default_factory=dict)  # component size -> how many components

    @property
    def largest(self) -> int:
        return max(self.sizes) if self.sizes else 0

    @property
    def connected(self) -> bool:
        return self.num_components == 1

    def size_multiset(self) -> list:
        return sorted(s for s, c in self.sizes.items() for _ in range(c))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "components": self.num_components,
            "sizes": {str(s): self.sizes[s] for s in sorted(self.sizes)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _x_edges(inst: FsInstance) -> np.ndarray:
    edges = [(u - 1, v - 1) for u, v in inst.x.edges()]
    return np.array(edges, dtype=np.int64).reshape(-1, 2)


def _y_matrix(inst: FsInstance) -> np.ndarray:
    return inst.y.adjacency_matrix().astype(np.uint8)


def _fact_table(n: int) -> np.ndarray:
    return np.array([factorial(k) for k in range(n + 1)], dtype=np.int64)


def _check_perm(inst: FsInstance, p) -> tuple:
    p = tuple(p)
    if len(p) != inst.n or not is_permutation(p):
        raise ParameterError(f"{list(p)} is not a permutation of 1..{inst.n}")
    return p


def fs_neighbors(inst: FsInstance, p) -> list:
    """States adjacent to ``p``, one per qualifying X-edge, in X-edge order."""
    p = _check_perm(inst, p)
    out = []
    for a, b in inst.x.edges():
        if inst.y.has_edge(p[a - 1], p[b - 1]):
            out.append(swap_positions(p, a, b))
    return out


def _union_find(inst: FsInstance, cfg: EngineConfig, stop_when_connected: bool):
    n = inst.n
    if n > cfg.max_full_n:
        raise ResourceError(
            f"n={n} exceeds max_full_n={cfg.max_full_n}; raise the cap to enumerate {n}! states"
        )
    total = factorial(n)
    dtype = np.int32 if total < 2**31 else np.int64
    itemsize = np.dtype(dtype).itemsize
    # parent array plus the per-component size table in the worst case
    need = total * (itemsize + 8)
    if need > cfg.memory_limit_bytes:
        raise ResourceError(
            f"{total} states need about {need / 2**20:.0f} MiB, "
            f"over the {cfg.memory_limit_bytes / 2**20:.0f} MiB limit"
        )
    parent = np.arange(total, dtype=dtype)
    comps = _kernels.union_all(
        n, _x_edges(inst), _y_matrix(inst), _fact_table(n), parent, stop_when_connected
    )
    return parent, int(comps), total


def fs_components(inst: FsInstance, cfg: Optional[EngineConfig] = None) -> ComponentSummary:
    cfg = cfg or EngineConfig()
    parent, comps, total = _union_find(inst, cfg, False)
    sizes = _kernels.component_sizes(parent, comps)
    del parent
    values, counts = np.unique(sizes, return_counts=True)
    hist = {int(s): int(c) for s, c in zip(values, counts)}
    if sum(s * c for s, c in hist.items()) != total:
        raise AssertionError("component sizes do not add up to n!")
    return ComponentSummary(inst.n, total, comps, hist)


def fs_is_connected(inst: FsInstance, cfg: Optional[EngineConfig] = None) -> bool:
    cfg = cfg or EngineConfig()
    _, comps, _ = _union_find(inst, cfg, True)
    return comps == 1


@dataclass
class ComponentReach:
    """Result of a bounded search from one seed state."""

    n: int
    size: int
    _visited: object = field(repr=False, default=None)

    def __contains__(self, p) -> bool:
        if isinstance(self._visited, set):
            return rank(p) in self._visited
        r = rank(p)
        return bool(self._visited[r >> 3] >> (r & 7) & 1)


def _bfs_python(inst, start, target, budget):
    """Hash-set search for n too large for an n!-bit visited array."""
    from collections import deque

    seen = {rank(start)}
    if start == target:
        return seen, True
    queue = deque([start])
    goal = None if target is None else rank(target)
    while queue:
        p = queue.popleft()
        for q in fs_neighbors(inst, p):
            r = rank(q)
            if r in seen:
                continue
            if len(seen) >= budget:
                raise BudgetExceeded(f"search stopped after {len(seen)} states", len(seen))
            seen.add(r)
            if r == goal:
                return seen, True
            queue.append(q)
    return seen, False


def _search(inst, p, q, cfg):
    n = inst.n
    total = factorial(n)
    budget = min(total, cfg.max_states)
    if n > BITSET_MAX_N:
        return _bfs_python(inst, p, q, budget)
    need = total // 8 + 1 + budget * 8
    if need > cfg.memory_limit_bytes:
        raise ResourceError(f"search over {total} states needs about {need / 2**20:.0f} MiB")
    visited = np.zeros(total // 8 + 1, dtype=np.uint8)
    queue = np.empty(budget, dtype=np.int64)
    target = -1 if q is None else rank(q)
    count, status = _kernels.bfs(
        n, _x_edges(inst), _y_matrix(inst), _fact_table(n), rank(p), target, budget,
        visited, queue,
    )
    if status == 2:
        raise BudgetExceeded(f"search stopped after {count} states", int(count))
    return (visited, int(count)), status == 1


def fs_component_of(inst: FsInstance, p, cfg: Optional[EngineConfig] = None) -> ComponentReach:
    """Size of the component holding ``p``, with a membership test for other states."""
    cfg = cfg or EngineConfig()
    p = _check_perm(inst, p)
    found, _ = _search(inst, p, None, cfg)
    if isinstance(found, set):
        return ComponentReach(inst.n, len(found), found)
    visited, count = found
    return ComponentReach(inst.n, count, visited)


def fs_same_component(inst: FsInstance, p, q, cfg: Optional[EngineConfig] = None) -> bool:
    cfg = cfg or EngineConfig()
    p = _check_perm(inst, p)
    q = _check_perm(inst, q)
    _, hit = _search(inst, p, q, cfg)
    return hit
