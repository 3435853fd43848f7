"""Independent reference implementations used only by the tests.

Everything here is deliberately naive: quadratic or exponential brute
force with no memoization and no shared code with the package, so that
agreement is meaningful.
"""

from __future__ import annotations

import itertools
import random

from cupstack.graphs import Graph


def floyd_warshall(g: Graph) -> list[list[float]]:
    inf = float("inf")
    d = [[inf] * g.n for _ in range(g.n)]
    for v in range(g.n):
        d[v][v] = 0
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def hamilton_path_by_permutations(g: Graph) -> list[int] | None:
    """First Hamilton path in lexicographic vertex order, or None."""
    for perm in itertools.permutations(range(g.n)):
        if all(g.has_edge(perm[i], perm[i + 1]) for i in range(g.n - 1)):
            return list(perm)
    return None


def legal_moves_by_definition(g: Graph, state) -> set[tuple[int, int, int]]:
    """Every (src, dst, cups) allowed by the rule, found by trying all pairs."""
    d = floyd_warshall(g)
    out = set()
    for src in range(g.n):
        r = state[src]
        if r == 0:
            continue
        for dst in range(g.n):
            if dst == src or state[dst] == 0:
                continue
            if d[src][dst] == r:
                out.add((src, dst, r))
    return out


def naive_decide(g: Graph, t: int) -> bool:
    """Plain depth first search over full move sequences, no memo."""
    d = floyd_warshall(g)
    n = g.n

    def dfs(state: tuple[int, ...]) -> bool:
        if state[t] == n:
            return True
        for src in range(n):
            r = state[src]
            if r == 0:
                continue
            for dst in range(n):
                if dst == src or state[dst] == 0 or d[src][dst] != r:
                    continue
                child = list(state)
                child[src] = 0
                child[dst] += r
                if dfs(tuple(child)):
                    return True
        return False

    return dfs(tuple([1] * n))


def naive_min_weight(g: Graph, t: int) -> int | None:
    """Minimum total cups moved over all full stackings, by exhaustion."""
    d = floyd_warshall(g)
    n = g.n
    best: list[int | None] = [None]

    def dfs(state: tuple[int, ...], cost: int) -> None:
        if best[0] is not None and cost >= best[0]:
            return
        if state[t] == n:
            best[0] = cost
            return
        for src in range(n):
            r = state[src]
            if r == 0:
                continue
            for dst in range(n):
                if dst == src or state[dst] == 0 or d[src][dst] != r:
                    continue
                child = list(state)
                child[src] = 0
                child[dst] += r
                dfs(tuple(child), cost + r)

    dfs(tuple([1] * n), 0)
    return best[0]


def chunkable_by_brute_force(xs: tuple[int, ...]) -> bool:
    """Try every placement of cut points between consecutive elements."""
    n = len(xs)
    for cuts in itertools.product([False, True], repeat=n - 1):
        starts = [0] + [i + 1 for i, c in enumerate(cuts) if c]
        ends = [s - 1 for s in starts[1:]] + [n - 1]
        if all(
            any(xs[i] == e - s + 1 for i in range(s, e + 1))
            for s, e in zip(starts, ends)
        ):
            return True
    return False


def connected_labeled_graph_count(n: int) -> int:
    """Number of isomorphism classes of connected graphs on n vertices,
    by deduplicating all labeled graphs under every permutation."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        adj = {v: set() for v in range(n)}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        stack, reached = [0], {0}
        while stack:
            for w in adj[stack.pop()]:
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        if len(reached) != n:
            continue
        canon = min(
            tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
            for p in itertools.permutations(range(n))
        )
        seen.add(canon)
    return len(seen)


def random_connected_graph(rng: random.Random, n: int, extra: int = 0) -> Graph:
    """Random tree plus extra random chords; always connected."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        edges.add(tuple(sorted((order[i], rng.choice(order[:i])))))
    candidates = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    ]
    rng.shuffle(candidates)
    edges.update(candidates[:extra])
    return Graph(n, sorted(edges))


def random_tree(rng: random.Random, n: int) -> Graph:
    return random_connected_graph(rng, n, 0)
