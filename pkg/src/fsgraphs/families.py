"""Constructors for the named graph families, with their fixed vertex labelings.

Spiders put the center on vertex ``n`` and lay the legs out as consecutive
blocks ``1..λ1``, ``λ1+1..λ1+λ2``, ... with the first vertex of each block
adjacent to the center, so the last vertex of each block is a foot. Tadpoles
keep the cycle on ``1..c`` (triple point ``c``) and the tail on ``c..n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import GraphSizeError, ParameterError
from .graph import MAX_VERTICES, Graph, degrees, is_connected


def _check_size(n: int):
    if n > MAX_VERTICES:
        raise GraphSizeError(f"{n} vertices exceeds the limit of {MAX_VERTICES}")


@dataclass(frozen=True)
class SpiderSignature:
    legs: tuple

    def __post_init__(self):
        legs = tuple(int(v) for v in self.legs)
        if not legs:
            raise ParameterError("a spider needs at least one leg")
        if any(v < 1 for v in legs):
            raise ParameterError("leg lengths must be positive")
        if any(a < b for a, b in zip(legs, legs[1:])):
            raise ParameterError(f"leg lengths must be non-increasing, got {legs}")
        object.__setattr__(self, "legs", legs)

    @classmethod
    def of(cls, legs: Iterable) -> "SpiderSignature":
        """Build a signature from legs in any order."""
        return cls(tuple(sorted((int(v) for v in legs), reverse=True)))

    @property
    def n(self) -> int:
        return 1 + sum(self.legs)

    @property
    def k(self) -> int:
        return len(self.legs)

    def __str__(self):
        return "spider(" + ",".join(map(str, self.legs)) + ")"


@dataclass(frozen=True)
class TadpoleParams:
    c: int
    tail: int

    def __post_init__(self):
        if self.c < 3:
            raise ParameterError("cycle length must be >= 3")
        if self.tail < 0:
            raise ParameterError("tail length must be >= 0")

    @property
    def n(self) -> int:
        return self.c + self.tail


@dataclass(frozen=True)
class SpycleSignature:
    legs: tuple = ()
    cycles: tuple = ()

    def __post_init__(self):
        legs = tuple(sorted((int(v) for v in self.legs), reverse=True))
        cycles = tuple(sorted((int(v) for v in self.cycles), reverse=True))
        if any(v < 1 for v in legs):
            raise ParameterError("leg lengths must be positive")
        if any(g < 3 for g in cycles):
            raise ParameterError("cycle length must be >= 3")
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "cycles", cycles)

    @property
    def n(self) -> int:
        # each cycle shares the center, so it adds gamma - 1 new vertices
        return 1 + sum(self.legs) + sum(g - 1 for g in self.cycles)

    def __str__(self):
        return "spycle({};{})".format(
            ",".join(map(str, self.legs)), ",".join(map(str, self.cycles))
        )


class VertexType(enum.Enum):
    CENTER = "center"
    A = "A"
    B = "B"
    C = "C"
    OTHER = "other"


SpiderLike = Union[SpiderSignature, Iterable]


def _as_spider(sig: SpiderLike) -> SpiderSignature:
    if isinstance(sig, SpiderSignature):
        return sig
    return SpiderSignature.of(sig)


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError("path needs n >= 1")
    _check_size(n)
    return Graph.from_edges(n, [(k, k + 1) for k in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle length must be >= 3")
    _check_size(n)
    return Graph.from_edges(n, [(k, k + 1) for k in range(1, n)] + [(n, 1)])


def star(n: int) -> Graph:
    if n < 2:
        raise ParameterError("star needs n >= 2")
    _check_size(n)
    return Graph.from_edges(n, [(1, b) for b in range(2, n + 1)])


def tadpole(c: int, tail: int = 0) -> Graph:
    """Cycle on ``1..c`` with a path of ``tail`` edges hanging off vertex ``c``."""
    p = TadpoleParams(c, tail)
    _check_size(p.n)
    return Graph.from_edges(p.n, [(k, k + 1) for k in range(1, p.n)] + [(1, c)])


def fruit(n: int) -> Graph:
    if n < 4:
        raise ParameterError("fruit graph needs n >= 4")
    return tadpole(n - 1, 1)


def _leg_edges(legs, center):
    edges = []
    start = 1
    for length in legs:
        edges.append((start, center))
        edges.extend((m, m + 1) for m in range(start, start + length - 1))
        start += length
    return edges, start


def spider(sig: SpiderLike) -> Graph:
    sig = _as_spider(sig)
    n = sig.n
    _check_size(n)
    edges, _ = _leg_edges(sig.legs, n)
    return Graph.from_edges(n, edges)


def spycle(sig: SpycleSignature) -> Graph:
    """Legs first (spider layout), then each cycle as a block of ``gamma - 1``
    consecutive vertices whose two ends both touch the center."""
    n = sig.n
    _check_size(n)
    if n == 1:
        return Graph.empty(1)
    edges, start = _leg_edges(sig.legs, n)
    for g in sig.cycles:
        block = list(range(start, start + g - 1))
        edges.extend(zip(block, block[1:]))
        edges.append((block[0], n))
        edges.append((block[-1], n))
        start += g - 1
    return Graph.from_edges(n, edges)


def grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise ParameterError("grid dimensions must be positive")
    _check_size(rows * cols)
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c + 1
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def recognize_spider(g: Graph) -> Optional[SpiderSignature]:
    """Leg signature if ``g`` is a spider. Paths come back as one-leg spiders."""
    if g.n < 2 or g.num_edges != g.n - 1 or not is_connected(g):
        return None
    deg = degrees(g)
    hubs = [v for v in range(1, g.n + 1) if deg[v - 1] >= 3]
    if len(hubs) > 1:
        return None
    if not hubs:
        return SpiderSignature((g.n - 1,))
    center = hubs[0]
    legs = []
    for start in g.neighbors(center):
        length, prev, cur = 1, center, start
        while deg[cur - 1] == 2:
            prev, cur = cur, next(w for w in g.neighbors(cur) if w != prev)
            length += 1
        legs.append(length)
    return SpiderSignature.of(legs)


def classify_vertices(sig: SpiderLike) -> dict:
    """Vertex types of ``spider(sig)`` in its standard labeling.

    Feet next to the center are A, the middle vertex of a length-2 leg is B,
    feet away from the center are C; inner vertices of longer legs are OTHER.
    """
    sig = _as_spider(sig)
    n = sig.n
    types = {n: VertexType.CENTER}
    start = 1
    for length in sig.legs:
        if length == 1:
            types[start] = VertexType.A
        else:
            foot = start + length - 1
            for v in range(start, foot):
                types[v] = VertexType.B if length == 2 else VertexType.OTHER
            types[foot] = VertexType.C
        start += length
    return types


def partitions(total: int, max_part: Optional[int] = None, max_parts: Optional[int] = None):
    """Yield the partitions of ``total`` as non-increasing tuples, largest first."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions(total - first, first, rest_parts):
            yield (first,) + rest


def spider_signatures(n: int, max_legs: Optional[int] = None):
    """Every spider signature on exactly ``n`` vertices (none below two)."""
    if n < 2:
        return
    for legs in partitions(n - 1, max_parts=max_legs):
        yield SpiderSignature(legs)


def spycle_signatures(n: int, min_cycles: int = 1, max_cycles: Optional[int] = None):
    """Spycles on exactly ``n`` vertices with a cycle count in the given range."""
    budget = n - 1
    for cycle_room in range(budget + 1):
        # cycles contribute sum(gamma - 1) = cycle_room new vertices
        for shifted in partitions(cycle_room, max_parts=max_cycles):
            if len(shifted) < min_cycles or any(s < 2 for s in shifted):
                continue
            cycles = tuple(s + 1 for s in shifted)
            for legs in partitions(budget - cycle_room):
                yield SpycleSignature(legs, cycles)
