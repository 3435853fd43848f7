# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled search kernels.

Mirror of cupstack._kernel_py: same functions, same move ordering, same
tie-breaking, bit-identical results.  Keep the two in sync.
"""

import heapq

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

BACKEND_NAME = "compiled"


def all_pairs_bfs(int n, starts, targets):
    cdef int m = len(targets)
    cdef int* cstarts = <int*> malloc((n + 1) * sizeof(int))
    cdef int* ctargets = <int*> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int* dist = <int*> malloc(n * sizeof(int))
    cdef int* queue = <int*> malloc(n * sizeof(int))
    if cstarts == NULL or ctargets == NULL or dist == NULL or queue == NULL:
        free(cstarts); free(ctargets); free(dist); free(queue)
        raise MemoryError()
    cdef int i, u, v, head, tail, du, src
    rows = []
    try:
        for i in range(n + 1):
            cstarts[i] = starts[i]
        for i in range(m):
            ctargets[i] = targets[i]
        for src in range(n):
            for i in range(n):
                dist[i] = -1
            dist[src] = 0
            queue[0] = src
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[u] + 1
                for i in range(cstarts[u], cstarts[u + 1]):
                    v = ctargets[i]
                    if dist[v] < 0:
                        dist[v] = du
                        queue[tail] = v
                        tail += 1
            rows.append([dist[i] for i in range(n)])
    finally:
        free(cstarts); free(ctargets); free(dist); free(queue)
    return rows


cdef class _Decide:
    cdef const unsigned char[::1] dist
    cdef unsigned char state[256]
    cdef int msrc[256]
    cdef int mdst[256]
    cdef int mcup[256]
    cdef int n, t, occupied, depth, overrun
    cdef long long explored, budget, memo_hits
    cdef set failed

    cdef bint dfs(self):
        cdef int src, dst, c, row
        if self.occupied == 1 and self.state[self.t] > 0:
            return True
        key = PyBytes_FromStringAndSize(<const char*> &self.state[0], self.n)
        if key in self.failed:
            self.memo_hits += 1
            return False
        if self.explored >= self.budget:
            self.overrun = 1
            return False
        self.explored += 1
        for src in range(self.n):
            c = self.state[src]
            if c == 0:
                continue
            row = src * self.n
            for dst in range(self.n):
                if dst == src or self.state[dst] == 0 or self.dist[row + dst] != c:
                    continue
                self.state[src] = 0
                self.state[dst] = <unsigned char> (self.state[dst] + c)
                self.occupied -= 1
                self.msrc[self.depth] = src
                self.mdst[self.depth] = dst
                self.mcup[self.depth] = c
                self.depth += 1
                if self.dfs():
                    return True
                self.depth -= 1
                self.occupied += 1
                self.state[dst] = <unsigned char> (self.state[dst] - c)
                self.state[src] = <unsigned char> c
                if self.overrun:
                    return False
        self.failed.add(key)
        return False


def decide_target(int n, bytes dist, int t, long long budget):
    if n > 255:
        raise ValueError("kernel states index vertices with one byte")
    cdef _Decide ctx = _Decide.__new__(_Decide)
    cdef int i
    ctx.dist = dist
    for i in range(n):
        ctx.state[i] = 1
    ctx.n = n
    ctx.t = t
    ctx.occupied = n
    ctx.depth = 0
    ctx.overrun = 0
    ctx.explored = 0
    ctx.budget = budget
    ctx.memo_hits = 0
    ctx.failed = set()
    if ctx.dfs():
        moves = [(ctx.msrc[i], ctx.mdst[i], ctx.mcup[i]) for i in range(ctx.depth)]
        return 1, moves, ctx.explored, ctx.memo_hits
    if ctx.overrun:
        return 2, None, ctx.explored, ctx.memo_hits
    return 0, None, ctx.explored, ctx.memo_hits


def min_weight_target(int n, bytes dist, int t, long long budget):
    if n > 255:
        raise ValueError("kernel states index vertices with one byte")
    cdef const unsigned char[::1] d = dist
    cdef unsigned char child_buf[256]
    cdef const unsigned char* sp
    cdef int src, dst, c, row, i
    cdef long long cost, w, counter = 1, popped = 0
    for i in range(n):
        child_buf[i] = 1
    start = PyBytes_FromStringAndSize(<const char*> child_buf, n)
    best = {start: 0}
    parent = {}
    frontier = [(0, 0, start)]
    settled = set()
    heappush = heapq.heappush
    heappop = heapq.heappop
    while frontier:
        item = heappop(frontier)
        s = item[2]
        if s in settled:
            continue
        settled.add(s)
        popped += 1
        if popped > budget:
            return 2, None, None, popped
        cost = item[0]
        sp = <const unsigned char*> PyBytes_AS_STRING(s)
        if sp[t] == n:
            moves = []
            cur = s
            while cur != start:
                prev, move = parent[cur]
                moves.append(move)
                cur = prev
            moves.reverse()
            return 1, cost, moves, popped
        for src in range(n):
            c = sp[src]
            if c == 0:
                continue
            row = src * n
            for dst in range(n):
                if dst == src or sp[dst] == 0 or d[row + dst] != c:
                    continue
                memcpy(child_buf, sp, n)
                child_buf[src] = 0
                child_buf[dst] = <unsigned char> (child_buf[dst] + c)
                child = PyBytes_FromStringAndSize(<const char*> child_buf, n)
                w = cost + c
                known = best.get(child)
                if known is None or w < <long long> known:
                    best[child] = w
                    parent[child] = (s, (src, dst, c))
                    heappush(frontier, (w, counter, child))
                    counter += 1
    return 0, None, None, popped
