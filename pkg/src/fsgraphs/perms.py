"""Lexicographic ranking of permutations of ``{1..n}``.

A permutation is a tuple ``p`` of length ``n`` where ``p[a-1]`` is the label
sitting on vertex ``a``. Ranks are the position of the one-line word in
lexicographic order, so the identity has rank 0 and the reversal ``n! - 1``.
"""

from __future__ import annotations

import math

from .errors import ParameterError

MAX_N = 20

_FACT = [math.factorial(k) for k in range(MAX_N + 1)]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    if n > MAX_N:
        raise OverflowError(f"{n}! does not fit in 64 bits")
    return _FACT[n]


def identity(n: int) -> tuple:
    return tuple(range(1, n + 1))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def inverse(p: tuple) -> tuple:
    inv = [0] * len(p)
    for pos, label in enumerate(p, start=1):
        inv[label - 1] = pos
    return tuple(inv)


def rank(p) -> int:
    n = len(p)
    if n > MAX_N:
        raise OverflowError(f"{n}! does not fit in 64 bits")
    if not is_permutation(p):
        raise ParameterError(f"{list(p)} is not a permutation of 1..{n}")
    used = 0
    r = 0
    for i, label in enumerate(p):
        below = label - 1 - bin(used & ((1 << (label - 1)) - 1)).count("1")
        r += below * _FACT[n - 1 - i]
        used |= 1 << (label - 1)
    return r


def unrank(r: int, n: int) -> tuple:
    total = factorial(n)
    if not 0 <= r < total:
        raise ParameterError(f"rank {r} out of range [0, {n}!)")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n):
        digit, r = divmod(r, _FACT[n - 1 - i])
        out.append(pool.pop(digit))
    return tuple(out)


def swap_positions(p: tuple, a: int, b: int) -> tuple:
    """Exchange the labels on vertices ``a`` and ``b`` (1-based)."""
    n = len(p)
    if a == b:
        raise ParameterError("swap needs two distinct positions")
    if not (1 <= a <= n and 1 <= b <= n):
        raise ParameterError(f"positions {a}, {b} out of range 1..{n}")
    q = list(p)
    q[a - 1], q[b - 1] = q[b - 1], q[a - 1]
    return tuple(q)
