"""Constructive stacking strategies.

Each solver emits an explicit move sequence and verifies it against the game
rule before returning; an invalid sequence is a solver defect and raises
RuntimeError rather than being handed to the caller.

The building blocks:

* stack_path gathers a path onto any of its vertices by recursive splitting.
* chunk_partition cuts a distance sequence into consecutive chunks, each
  containing an element equal to its length; stack_chunked_path uses it to
  drain a path onto an outside target chunk by chunk.
* canonical_hamilton_path threads a product of paths in boustrophedon order.
* solve_bipartite_paths and solve_power combine these for bipartite graphs
  with path partitions and their Cartesian powers.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from . import config, errors
from .engine import Move, MoveSequence, verify_sequence
from .graphs import (
    DistanceMatrix,
    Graph,
    PathPartition,
    bipartition,
    find_hamilton_path,
    graph_power,
    is_tree,
    path_partition,
    power_index,
    tree_spread_and_diameter,
)


def _checked(g: Graph, t: int, moves: list[Move], dist: DistanceMatrix) -> MoveSequence:
    seq = MoveSequence(tuple(moves))
    verdict = verify_sequence(g, t, seq, dist)
    if not verdict:
        raise RuntimeError(
            f"solver produced an invalid sequence: {verdict.reason} "
            f"(move {verdict.failed_index})"
        )
    return seq


def _validate_path(g: Graph, p: Sequence[int]) -> None:
    if len(set(p)) != len(p) or not p:
        raise errors.ParameterError("path vertices must be distinct and nonempty")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise errors.ParameterError(f"vertices {a}, {b} are not adjacent")


def stack_path(
    g: Graph, dist: DistanceMatrix, p: Sequence[int], target_index: int
) -> MoveSequence:
    """Stack a path's cups onto the vertex at target_index.

    p must be a path in g (not necessarily isometric); distances are taken
    in the whole graph.  Splitting: with the target at position t > 0 and
    s = d(p[0], p[t]), gather p[:s] onto p[0], gather p[s:] onto p[t]
    recursively, then jump the s collected cups from p[0] to p[t] in one
    move.  s <= t always, so the target stays in the second part.  Uses
    exactly len(p) - 1 moves and touches no vertex outside p.
    """
    p = list(p)
    _validate_path(g, p)
    if not 0 <= target_index < len(p):
        raise errors.ParameterError(f"target index {target_index} out of range")
    moves: list[Move] = []
    _stack_path(dist, p, target_index, moves)
    return MoveSequence(tuple(moves))


def _stack_path(dist, p: list[int], ti: int, out: list[Move]) -> None:
    if len(p) == 1:
        return
    if ti == 0:
        p = p[::-1]
        ti = len(p) - 1
    s = dist.d(p[0], p[ti])
    _stack_path(dist, p[:s], 0, out)
    _stack_path(dist, p[s:], ti - s, out)
    out.append(Move(p[0], p[ti], s))


def solve_via_hamilton(
    g: Graph,
    t: int,
    ham_path: Sequence[int] | None = None,
    max_vertices: int | None = None,
) -> MoveSequence:
    """Stack everything onto t along a Hamilton path.

    A supplied path is validated; otherwise the bitmask DP looks for one.
    NoHamiltonPathError means none exists; BudgetExceededError means the
    graph is too large to decide here, which is a different situation.
    """
    if not 0 <= t < g.n:
        raise errors.ParameterError(f"target {t} out of range")
    if ham_path is None:
        ham_path = find_hamilton_path(g, max_vertices)
        if ham_path is None:
            raise errors.NoHamiltonPathError(f"graph on {g.n} vertices has no Hamilton path")
    else:
        ham_path = list(ham_path)
        if sorted(ham_path) != list(range(g.n)):
            raise errors.ParameterError("supplied sequence does not visit every vertex once")
        _validate_path(g, ham_path)
    dist = g.distances()
    moves = list(stack_path(g, dist, ham_path, ham_path.index(t)))
    return _checked(g, t, moves, dist)


@dataclass(frozen=True)
class Chunk:
    """Consecutive block xs[start..end] with xs[anchor] == its length."""

    start: int
    end: int
    anchor: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class Chunking:
    chunks: tuple[Chunk, ...]

    def __iter__(self):
        return iter(self.chunks)

    def __len__(self):
        return len(self.chunks)


def chunk_partition(xs: Sequence[int]) -> Chunking | None:
    """Cut xs into consecutive chunks that each contain an element equal to
    the chunk's length, or return None if no such partition exists.

    Feasibility by prefix dynamic programming; reconstruction prefers the
    shortest feasible final chunk at every step, so the result is unique
    and deterministic.  The anchor recorded per chunk is the leftmost
    element equal to the length.
    """
    xs = list(xs)
    if not xs:
        raise errors.ParameterError("cannot chunk an empty sequence")
    if any(x < 1 for x in xs):
        raise errors.ParameterError("chunked values must be positive")
    n = len(xs)

    def proper(j: int, i: int) -> bool:
        # chunk covering xs[j..i] inclusive, 0-based
        length = i - j + 1
        return any(xs[k] == length for k in range(j, i + 1))

    feasible = [True] + [False] * n
    for i in range(1, n + 1):
        for j in range(i, 0, -1):
            if feasible[j - 1] and proper(j - 1, i - 1):
                feasible[i] = True
                break
    if not feasible[n]:
        return None
    bounds: list[tuple[int, int]] = []
    i = n
    while i > 0:
        for j in range(i, 0, -1):
            if feasible[j - 1] and proper(j - 1, i - 1):
                bounds.append((j - 1, i - 1))
                i = j - 1
                break
    chunks = []
    for start, end in reversed(bounds):
        length = end - start + 1
        anchor = next(k for k in range(start, end + 1) if xs[k] == length)
        chunks.append(Chunk(start, end, anchor))
    return Chunking(tuple(chunks))


def _chunked_moves(
    g: Graph, dist: DistanceMatrix, p: list[int], t: int
) -> tuple[list[Move], list[int], Chunking] | None:
    """Moves draining path p onto outside vertex t, with the orientation
    used and the chunking; None if neither orientation chunks."""
    for oriented in (p, p[::-1]):
        xs = [dist.d(v, t) for v in oriented]
        chunking = chunk_partition(xs)
        if chunking is None:
            continue
        moves: list[Move] = []
        for chunk in chunking:
            sub = oriented[chunk.start : chunk.end + 1]
            moves.extend(stack_path(g, dist, sub, chunk.anchor - chunk.start))
            moves.append(Move(oriented[chunk.anchor], t, chunk.length))
        return moves, oriented, chunking
    return None


def stack_chunked_path(
    g: Graph, dist: DistanceMatrix, p: Sequence[int], t: int
) -> MoveSequence | None:
    """Drain a path onto a target vertex not on it, chunk by chunk.

    Each chunk is gathered onto its anchor, whose distance to t equals the
    chunk size, then jumped onto t in one move.  Tries the given
    orientation first, then the reversal; returns None if neither admits a
    chunk partition.  The emitted moves assume t already holds a cup.
    """
    p = list(p)
    _validate_path(g, p)
    if t in p:
        raise errors.ParameterError(f"target {t} lies on the path")
    result = _chunked_moves(g, dist, p, t)
    if result is None:
        return None
    return MoveSequence(tuple(result[0]))


def bipartite_paths_report(g: Graph, pp: PathPartition, t: int) -> dict:
    """Which hypotheses of the bipartite path-partition strategy hold.

    When all hold the construction is guaranteed to succeed; otherwise it
    still runs best-effort and may fail to chunk.
    """
    dist = g.distances()
    d = dist.diameter()
    failures = []
    if len(pp) < 2:
        failures.append("fewer than two paths")
    first = next((i for i, p in enumerate(pp) if t in p), None)
    for i, p in enumerate(pp):
        if i == first:
            continue
        if len(p) < d * d:
            failures.append(f"path {i} has {len(p)} < diameter^2 = {d * d} vertices")
        end_dist = dist.d(p[0], p[-1])
        if end_dist in (2, 4):
            failures.append(f"path {i} endpoints at distance {end_dist} (2 and 4 are unsafe)")
    return {"diameter": d, "guaranteed": not failures, "failures": failures}


def solve_bipartite_paths(
    g: Graph,
    pp: PathPartition | Sequence[Sequence[int]],
    t: int,
    return_plan: bool = False,
):
    """Stack a connected bipartite graph onto t along a path partition.

    The path holding t is stacked onto t directly; every other path is
    drained chunk by chunk, which is what bipartiteness makes possible:
    distances to t change by exactly 1 along a path, so the distance
    sequences are unit-step and chunk under the documented hypotheses
    (see bipartite_paths_report).  Returns None when some path fails to
    chunk in both orientations.
    """
    if not 0 <= t < g.n:
        raise errors.ParameterError(f"target {t} out of range")
    bipartition(g)  # raises on disconnected or odd cycles
    pp = path_partition(g, pp)
    dist = g.distances()
    first = next(i for i, p in enumerate(pp) if t in p)
    p1 = pp.paths[first]
    moves = list(stack_path(g, dist, p1, p1.index(t)))
    plan: dict = {
        "target": t,
        "first_path": first,
        "paths": [list(p) for p in pp],
        "report": bipartite_paths_report(g, pp, t),
        "drains": [],
    }
    for i, p in enumerate(pp):
        if i == first:
            continue
        result = _chunked_moves(g, dist, list(p), t)
        if result is None:
            return (None, plan) if return_plan else None
        chunk_moves, oriented, chunking = result
        moves.extend(chunk_moves)
        plan["drains"].append(
            {
                "path": i,
                "oriented": oriented,
                "chunks": [
                    {"start": c.start, "end": c.end, "anchor": oriented[c.anchor]}
                    for c in chunking
                ],
            }
        )
    seq = _checked(g, t, moves, dist)
    return (seq, plan) if return_plan else seq


def canonical_hamilton_path(paths: Sequence[Sequence]) -> list[tuple]:
    """Boustrophedon walk of a product of paths.

    Entries are tuples with one coordinate per input path, the first path
    varying fastest: each new path repeats the previous walk once per
    vertex, reversing direction every step so consecutive tuples stay
    adjacent in the product.
    """
    if not paths or any(not p for p in paths):
        raise errors.ParameterError("need at least one nonempty path")
    walk = [(v,) for v in paths[0]]
    for p in paths[1:]:
        extended = []
        for i, x in enumerate(p):
            block = walk if i % 2 == 0 else walk[::-1]
            extended.extend(prefix + (x,) for prefix in block)
        walk = extended
    return walk


def solve_power(
    g: Graph,
    r: int,
    pp: PathPartition | Sequence[Sequence[int]],
    t: int,
    power: Graph | None = None,
    dist: DistanceMatrix | None = None,
    vertex_budget: int | None = None,
    return_plan: bool = False,
):
    """Stack the r-th Cartesian power of a bipartite graph onto vertex t.

    The path partition of the base slices the power into disjoint grids
    (products of r partition paths).  The grid holding t is stacked along
    its canonical Hamilton path.  Every other grid has a coordinate whose
    path misses the matching coordinate of t; that coordinate is walked
    innermost, the other paths are oriented so their first vertex is never
    the matching target coordinate, and the resulting walk is drained onto
    t chunk by chunk.  Returns None if some grid fails to chunk.

    t is an index in the power graph (see graph_power for the numbering).
    Pass power/dist to reuse a prebuilt product across targets.
    """
    if r < 2:
        raise errors.ParameterError(f"power construction needs r >= 2, got {r}")
    bipartition(g)
    pp = path_partition(g, pp)
    if any(len(p) < 2 for p in pp):
        raise errors.ParameterError("every partition path needs >= 2 vertices")
    if power is None:
        power = graph_power(g, r, vertex_budget)
    if dist is None:
        dist = power.distances()
    if not 0 <= t < power.n:
        raise errors.ParameterError(f"target {t} out of range for the power graph")

    on_path = {}
    for i, p in enumerate(pp):
        for v in p:
            on_path[v] = i
    strides = [g.n ** (r - 1 - j) for j in range(r)]
    t_coords = []
    rem = t
    for j in range(r):
        c, rem = divmod(rem, strides[j])
        t_coords.append(c)
    t_grid = tuple(on_path[c] for c in t_coords)

    grids = [t_grid] + [
        gr for gr in itertools.product(range(len(pp)), repeat=r) if gr != t_grid
    ]
    moves: list[Move] = []
    plan: dict = {"target": t, "target_coords": t_coords, "grids": []}
    for grid in grids:
        if grid == t_grid:
            walk = canonical_hamilton_path([pp.paths[i] for i in grid])
            idx = [power_index(g.n, r, tup) for tup in walk]
            moves.extend(stack_path(power, dist, idx, idx.index(t)))
            plan["grids"].append({"grid": list(grid), "kind": "target"})
            continue
        inner = next(j for j in range(r) if t_coords[j] not in pp.paths[grid[j]])
        oriented: list[list[int]] = []
        for j in range(r):
            pj = list(pp.paths[grid[j]])
            if j != inner and pj[0] == t_coords[j]:
                pj.reverse()
            oriented.append(pj)
        order = [inner] + [j for j in range(r) if j != inner]
        walk = canonical_hamilton_path([oriented[j] for j in order])
        idx = []
        for tup in walk:
            coords = [0] * r
            for k, j in enumerate(order):
                coords[j] = tup[k]
            idx.append(power_index(g.n, r, coords))
        result = _chunked_moves(power, dist, idx, t)
        if result is None:
            return (None, plan) if return_plan else None
        chunk_moves, walk_used, chunking = result
        moves.extend(chunk_moves)
        plan["grids"].append(
            {
                "grid": list(grid),
                "kind": "chunked",
                "innermost": inner,
                "chunks": [
                    {"start": c.start, "end": c.end, "anchor": walk_used[c.anchor]}
                    for c in chunking
                ],
            }
        )
    seq = _checked(power, t, moves, dist)
    return (seq, plan) if return_plan else seq


def min_power_for_stackability(k: int, d: int) -> int:
    """Smallest r >= 2 with k^r >= (d*r)^2.

    For a bipartite graph of diameter d partitioned into paths of at least
    k >= 2 vertices, that exponent makes the r-th power stackable.
    """
    if k < 2:
        raise errors.ParameterError(f"need path size k >= 2, got {k}")
    if d < 1:
        raise errors.ParameterError(f"need diameter d >= 1, got {d}")
    r = 2
    while k**r < (d * r) ** 2:
        r += 1
    return r


def tree_path_partition(tree: Graph) -> PathPartition:
    """Partition a tree into paths, each with at least spread/2 vertices.

    Rooted at the lowest-numbered leaf, repeatedly take a deepest leaf x,
    find the deepest vertex y on the root-to-x path with more than one
    child, and peel off the path below y down to x.  Once the remainder is
    a bare path it becomes the final part.  Peeled parts come first, in
    removal order.
    """
    if not is_tree(tree):
        raise errors.NotATreeError("path partition by peeling needs a tree")
    if tree.n == 1:
        return PathPartition(((0,),))
    root = min(v for v in range(tree.n) if tree.degree(v) == 1)
    alive = set(range(tree.n))
    adj = {v: set(tree.neighbors(v)) for v in range(tree.n)}
    parts: list[tuple[int, ...]] = []
    while True:
        if all(len(adj[v]) <= 2 for v in alive):
            walk = [root]
            prev = None
            cur = root
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                walk.append(cur)
            parts.append(tuple(walk))
            break
        parent: dict[int, int | None] = {root: None}
        depth = {root: 0}
        order = [root]
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in sorted(adj[u]):
                if w not in parent:
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    order.append(w)
                    queue.append(w)
        x = min(
            (v for v in alive if len(adj[v]) == 1 and v != root),
            key=lambda v: (-depth[v], v),
        )
        spine = []
        v: int | None = x
        while v is not None:
            spine.append(v)
            v = parent[v]
        spine.reverse()  # root .. x
        children = {u: [w for w in adj[u] if parent.get(w) == u] for u in alive}
        y = max(
            (u for u in spine if len(children[u]) > 1),
            key=lambda u: depth[u],
        )
        cut = spine[spine.index(y) + 1 :]  # child of y down to x
        parts.append(tuple(cut))
        for v in cut:
            alive.discard(v)
            for w in adj[v]:
                adj[w].discard(v)
            adj[v] = set()
    return path_partition(tree, parts)


@dataclass(frozen=True)
class TreePowerReport:
    """Whether the tree-cube route to stackability applies, and the smallest
    subdivision factor that makes it apply."""

    spread: int
    diameter: int
    cube_applies: bool
    min_subdivision: int | None
    subdivision: int | None = None
    subdivided_applies: bool | None = None


def check_tree_power_hypotheses(tree: Graph, s: int | None = None) -> TreePowerReport:
    """Report on the cube condition for a tree: spread k >= 72 and
    72 d^2 <= k^3 (all integer arithmetic; no floating point).

    An s-fold subdivision scales both spread and diameter by s, so the
    condition after subdividing is 72 d^2 <= s k^3 with s k >= 72; the
    smallest such s is reported, or None for a single vertex.
    """
    k, d = tree_spread_and_diameter(tree)
    applies = k >= 72 and 72 * d * d <= k**3
    if k == 0:
        min_s = None
    else:
        min_s = max(-(-72 * d * d // k**3), -(-72 // k), 1)
    sub_applies = None
    if s is not None:
        if s < 1:
            raise errors.ParameterError(f"subdivision factor must be >= 1, got {s}")
        sub_applies = s * k >= 72 and 72 * d * d <= s * k**3
    return TreePowerReport(k, d, applies, min_s, s, sub_applies)
