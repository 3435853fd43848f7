"""Pure-Python search kernels.

Reference implementations of the hot loops; cupstack._speedups is the compiled
mirror.  Both expose the same three functions with identical semantics, move
ordering, and tie-breaking, so results are bit-for-bit interchangeable.

States are cup-count vectors, one byte per vertex.  Distance matrices arrive
as flat bytes of length n*n (callers guarantee connectivity and n <= 255).

Status codes: 1 = solved, 0 = definitively impossible, 2 = budget exhausted.
"""

from __future__ import annotations

import heapq
from collections import deque

BACKEND_NAME = "python"


def all_pairs_bfs(n, starts, targets):
    """BFS from every vertex over a CSR adjacency (starts, targets).

    Returns a list of n rows; row[u][v] is the hop distance, -1 if unreachable.
    """
    rows = []
    for source in range(n):
        dist = [-1] * n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for i in range(starts[u], starts[u + 1]):
                v = targets[i]
                if dist[v] < 0:
                    dist[v] = du
                    queue.append(v)
        rows.append(dist)
    return rows


class _Budget(Exception):
    pass


def decide_target(n, dist, t, budget):
    """Depth-first search for a sequence stacking every cup onto t.

    Returns (status, moves, explored, memo_hits); moves is a list of
    (src, dst, cups) triples when status == 1, else None.  Failed states are
    memoized by their full cup-count vector.
    """
    state = bytearray([1] * n)
    occupied = n
    failed = set()
    stack = []
    explored = 0
    memo_hits = 0

    def dfs():
        nonlocal occupied, explored, memo_hits
        if occupied == 1 and state[t]:
            return True
        key = bytes(state)
        if key in failed:
            memo_hits += 1
            return False
        if explored >= budget:
            raise _Budget
        explored += 1
        for src in range(n):
            cups = state[src]
            if cups == 0:
                continue
            row = src * n
            for dst in range(n):
                if dst == src or state[dst] == 0 or dist[row + dst] != cups:
                    continue
                state[src] = 0
                state[dst] += cups
                occupied -= 1
                stack.append((src, dst, cups))
                if dfs():
                    return True
                stack.pop()
                occupied += 1
                state[dst] -= cups
                state[src] = cups
        failed.add(key)
        return False

    try:
        found = dfs()
    except _Budget:
        return 2, None, explored, memo_hits
    if found:
        return 1, list(stack), explored, memo_hits
    return 0, None, explored, memo_hits


def min_weight_target(n, dist, t, budget):
    """Uniform-cost search for the cheapest all-cups-onto-t sequence.

    Move cost is the number of cups moved.  Successors are generated in
    lexicographic (src, dst) order and ties in the frontier are broken by
    insertion order, so the returned witness is deterministic.

    Returns (status, mu, moves, explored).
    """
    start = bytes([1] * n)
    best = {start: 0}
    parent = {}
    frontier = [(0, 0, start)]
    counter = 1
    settled = set()
    popped = 0

    while frontier:
        cost, _, s = heapq.heappop(frontier)
        if s in settled:
            continue
        settled.add(s)
        popped += 1
        if popped > budget:
            return 2, None, None, popped
        if s[t] == n:
            moves = []
            cur = s
            while cur != start:
                prev, move = parent[cur]
                moves.append(move)
                cur = prev
            moves.reverse()
            return 1, cost, moves, popped
        for src in range(n):
            cups = s[src]
            if cups == 0:
                continue
            row = src * n
            for dst in range(n):
                if dst == src or s[dst] == 0 or dist[row + dst] != cups:
                    continue
                child = bytearray(s)
                child[src] = 0
                child[dst] += cups
                child = bytes(child)
                w = cost + cups
                known = best.get(child)
                if known is None or w < known:
                    best[child] = w
                    parent[child] = (s, (src, dst, cups))
                    heapq.heappush(frontier, (w, counter, child))
                    counter += 1
    return 0, None, None, popped
