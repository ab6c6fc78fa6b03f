"""Compiled inner loops for the implicit FS(X, Y) state space.

States are lexicographic ranks of permutations with 0-based labels. ``xe`` is
an ``(m, 2)`` array of X-edges ``(a, b)`` with ``a < b``; ``yadj`` is the
0/1 adjacency matrix of Y; ``fact[k] = k!``.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _next_permutation(perm):
    n = perm.size
    i = n - 2
    while i >= 0 and perm[i] > perm[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while perm[j] < perm[i]:
        j -= 1
    perm[i], perm[j] = perm[j], perm[i]
    lo, hi = i + 1, n - 1
    while lo < hi:
        perm[lo], perm[hi] = perm[hi], perm[lo]
        lo += 1
        hi -= 1
    return True


@njit(cache=True)
def _unrank_into(r, n, fact, perm, pool):
    for k in range(n):
        pool[k] = k
    left = n
    for i in range(n):
        f = fact[n - 1 - i]
        d = r // f
        r = r % f
        perm[i] = pool[d]
        for k in range(d, left - 1):
            pool[k] = pool[k + 1]
        left -= 1


@njit(cache=True)
def _swap_rank(r, perm, a, b, n, fact):
    """Rank after swapping positions a < b, given perm[a] < perm[b].

    Only Lehmer digits at a, b and the positions between them move.
    """
    u = perm[a]
    v = perm[b]
    between = 0
    mid = 0
    for t in range(a + 1, b):
        w = perm[t]
        if u < w and w < v:
            between += 1
            mid += fact[n - 1 - t]
    after = 0
    for t in range(b + 1, n):
        w = perm[t]
        if u < w and w < v:
            after += 1
    return r + fact[n - 1 - a] * (1 + between + after) + mid - fact[n - 1 - b] * after


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def union_all(n, xe, yadj, fact, parent, stop_when_connected):
    """Union every state with its qualifying higher-ranked neighbours.

    Roots are always the smallest rank in their set. Returns the component
    count (1 as soon as everything merged, when short-circuiting).
    """
    total = fact[n]
    m = xe.shape[0]
    perm = np.arange(n)
    comps = total
    if stop_when_connected and comps == 1:
        return comps
    for i in range(total):
        for e in range(m):
            a = xe[e, 0]
            b = xe[e, 1]
            u = perm[a]
            v = perm[b]
            # each FS edge is seen from its lower-ranked end only
            if u < v and yadj[u, v]:
                j = _swap_rank(i, perm, a, b, n, fact)
                ri = _find(parent, i)
                rj = _find(parent, j)
                if ri != rj:
                    if ri < rj:
                        parent[rj] = ri
                    else:
                        parent[ri] = rj
                    comps -= 1
                    if stop_when_connected and comps == 1:
                        return comps
        _next_permutation(perm)
    return comps


@njit(cache=True)
def component_sizes(parent, num_components):
    """Sizes of all components, indexed in order of their smallest rank.

    Overwrites ``parent``: roots become ``-(id + 1)``.
    """
    sizes = np.zeros(num_components, np.int64)
    next_id = 0
    for i in range(parent.size):
        p = parent[i]
        if p == i:
            parent[i] = -(next_id + 1)
            sizes[next_id] += 1
            next_id += 1
        else:
            # parent pointers only go downward, so p's root is final already
            while parent[p] >= 0:
                p = parent[p]
            sizes[-parent[p] - 1] += 1
    return sizes


@njit(cache=True)
def bfs(n, xe, yadj, fact, start, target, budget, visited, queue):
    """Breadth-first search from ``start`` over ranks.

    ``visited`` is a bitset of n! bits. Returns ``(count, status)`` with
    status 0 = exhausted, 1 = reached ``target``, 2 = budget exceeded.
    """
    m = xe.shape[0]
    perm = np.empty(n, np.int64)
    pool = np.empty(n, np.int64)
    visited[start >> 3] |= np.uint8(1 << (start & 7))
    queue[0] = start
    head = 0
    tail = 1
    if start == target:
        return tail, 1
    while head < tail:
        r = queue[head]
        head += 1
        _unrank_into(r, n, fact, perm, pool)
        for e in range(m):
            a = xe[e, 0]
            b = xe[e, 1]
            u = perm[a]
            v = perm[b]
            if not yadj[u, v]:
                continue
            if u < v:
                s = _swap_rank(r, perm, a, b, n, fact)
            else:
                # rank of the swapped state, seen from its own side
                perm[a] = v
                perm[b] = u
                s = r - (_swap_rank(0, perm, a, b, n, fact))
                perm[a] = u
                perm[b] = v
            bit = np.uint8(1 << (s & 7))
            if visited[s >> 3] & bit:
                continue
            if tail >= budget:
                return tail, 2
            visited[s >> 3] |= bit
            queue[tail] = s
            tail += 1
            if s == target:
                return tail, 1
    return tail, 0
