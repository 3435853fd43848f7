"""Finite simple graphs and the structural operations the solvers rely on.

Vertices are integers 0..n-1.  Graphs are immutable after construction and
safe to share; distance matrices are computed once per graph and cached.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from . import config, errors
from ._backend import kernel


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Parallel edges are collapsed; self-loops are rejected.  Optional labels
    give vertices names from a generating construction (subsets, product
    tuples) and never affect structure, equality, or hashing.
    """

    __slots__ = ("n", "m", "labels", "_adj", "_edges", "_bitrows_cache", "_dist_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels: Sequence | None = None):
        if n < 1:
            raise errors.ParameterError(f"graph needs at least one vertex, got n={n}")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise errors.ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise errors.ParameterError(f"self-loop at vertex {u} is not allowed")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            adj[e[0]].append(e[1])
            adj[e[1]].append(e[0])
        self.n = n
        self.m = len(seen)
        self._edges = tuple(sorted(seen))
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise errors.ParameterError(f"expected {n} labels, got {len(labels)}")
        self.labels = labels
        self._bitrows_cache = None
        self._dist_cache = None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return self._edges

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._edges)

    @property
    def bitrows(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks; used by the mask-based algorithms."""
        if self._bitrows_cache is None:
            self._bitrows_cache = tuple(
                sum(1 << u for u in nbrs) for nbrs in self._adj
            )
        return self._bitrows_cache

    def is_connected(self) -> bool:
        reached = 1
        frontier = [0]
        seen = bytearray(self.n)
        seen[0] = 1
        while frontier:
            u = frontier.pop()
            for v in self._adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    reached += 1
                    frontier.append(v)
        return reached == self.n

    def distances(self) -> "DistanceMatrix":
        if self._dist_cache is None:
            self._dist_cache = all_pairs_distances(self)
        return self._dist_cache

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph where old vertex v becomes perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise errors.ParameterError("relabeling must be a permutation of the vertices")
        labels = None
        if self.labels is not None:
            slots = [None] * self.n
            for v, lab in enumerate(self.labels):
                slots[perm[v]] = lab
            labels = tuple(slots)
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self._edges], labels)

    def with_labels(self, labels: Sequence | None) -> "Graph":
        return Graph(self.n, self._edges, labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold None, never a big int."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: tuple[tuple[int | None, ...], ...]):
        self.rows = rows
        self.n = len(rows)

    def d(self, x: int, y: int) -> int | None:
        return self.rows[x][y]

    @property
    def connected(self) -> bool:
        return all(v is not None for row in self.rows for v in row)

    def eccentricity(self, v: int) -> int:
        row = self.rows[v]
        if any(d is None for d in row):
            raise errors.DisconnectedGraphError("eccentricity needs a connected graph")
        return max(row)

    def diameter(self) -> int:
        return max(self.eccentricity(v) for v in range(self.n))

    def flat_bytes(self) -> bytes:
        """Row-major byte matrix for the search kernels.

        Only valid for connected graphs with n and every distance below 256;
        the searches this feeds are budgeted far below that anyway.
        """
        if self.n > config.SEARCH_MAX_VERTICES:
            raise errors.BudgetExceededError(
                f"search kernels index vertices with one byte, n={self.n} is too large"
            )
        out = bytearray(self.n * self.n)
        pos = 0
        for row in self.rows:
            for d in row:
                if d is None:
                    raise errors.DisconnectedGraphError(
                        "search kernels require a connected graph"
                    )
                if d > 255:
                    raise errors.BudgetExceededError("distance exceeds one byte")
                out[pos] = d
                pos += 1
        return bytes(out)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex (compiled kernel when available)."""
    starts = [0]
    targets: list[int] = []
    for v in range(g.n):
        targets.extend(g.neighbors(v))
        starts.append(len(targets))
    rows = kernel.all_pairs_bfs(g.n, starts, targets)
    return DistanceMatrix(
        tuple(tuple(d if d >= 0 else None for d in row) for row in rows)
    )


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring of a connected bipartite graph; vertex 0 gets color 0."""

    color: tuple[int, ...]

    @property
    def classes(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        zero = tuple(v for v, c in enumerate(self.color) if c == 0)
        one = tuple(v for v, c in enumerate(self.color) if c == 1)
        return zero, one

    @property
    def delta(self) -> int:
        """Absolute size imbalance of the two classes."""
        ones = sum(self.color)
        return abs(len(self.color) - 2 * ones)


def bipartition(g: Graph) -> Bipartition:
    """Two-color g; raises if g is disconnected or has an odd cycle."""
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    seen = 1
    while queue:
        nxt: list[int] = []
        for u in queue:
            cu = color[u]
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - cu
                    seen += 1
                    nxt.append(v)
                elif color[v] == cu:
                    raise errors.NotBipartiteError(
                        f"edge ({u}, {v}) closes an odd cycle"
                    )
        queue = nxt
    if seen != g.n:
        raise errors.DisconnectedGraphError("bipartition needs a connected graph")
    return Bipartition(tuple(color))


@dataclass(frozen=True)
class PathPartition:
    """Vertex-disjoint paths covering a graph, each given as a vertex sequence."""

    paths: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.paths)

    def __len__(self):
        return len(self.paths)


def path_partition(g: Graph, paths: Iterable[Sequence[int]]) -> PathPartition:
    """Validate that paths partition V(g) and are paths in g."""
    paths = tuple(tuple(p) for p in paths)
    seen: set[int] = set()
    for p in paths:
        if not p:
            raise errors.InvalidPartitionError("empty path in partition")
        for v in p:
            if not 0 <= v < g.n:
                raise errors.InvalidPartitionError(f"vertex {v} out of range")
            if v in seen:
                raise errors.InvalidPartitionError(f"vertex {v} appears twice")
            seen.add(v)
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                raise errors.InvalidPartitionError(
                    f"consecutive vertices {a}, {b} are not adjacent"
                )
    if len(seen) != g.n:
        missing = sorted(set(range(g.n)) - seen)
        raise errors.InvalidPartitionError(f"vertices not covered: {missing}")
    return PathPartition(paths)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (a, b) gets index a * h.n + b."""
    edges: list[tuple[int, int]] = []
    for a in range(g.n):
        base = a * h.n
        for u, v in h.edges():
            edges.append((base + u, base + v))
    for u, v in g.edges():
        for b in range(h.n):
            edges.append((u * h.n + b, v * h.n + b))
    gl = g.labels if g.labels is not None else tuple(range(g.n))
    hl = h.labels if h.labels is not None else tuple(range(h.n))
    labels = tuple((gl[a], hl[b]) for a in range(g.n) for b in range(h.n))
    return Graph(g.n * h.n, edges, labels)


def power_index(base_n: int, r: int, coords: Sequence[int]) -> int:
    """Index of a coordinate tuple in graph_power(g, r); first coordinate is
    most significant."""
    idx = 0
    for c in coords:
        idx = idx * base_n + c
    return idx


def graph_power(g: Graph, r: int, vertex_budget: int | None = None) -> Graph:
    """r-fold Cartesian power of g.

    Vertices are r-tuples of base vertices, indexed in mixed radix with the
    first coordinate most significant (see power_index).  Refuses to build
    more than vertex_budget vertices.
    """
    if r < 1:
        raise errors.ParameterError(f"power exponent must be >= 1, got {r}")
    budget = vertex_budget if vertex_budget is not None else config.VERTEX_BUDGET
    total = g.n**r
    if total > budget:
        raise errors.BudgetExceededError(
            f"{g.n}^{r} = {total} vertices exceeds the budget of {budget}"
        )
    strides = [g.n ** (r - 1 - j) for j in range(r)]
    edges: list[tuple[int, int]] = []
    for idx in range(total):
        rem = idx
        for j in range(r):
            c, rem = divmod(rem, strides[j])
            step = strides[j]
            for w in g.neighbors(c):
                if w > c:
                    edges.append((idx, idx + (w - c) * step))
    gl = g.labels if g.labels is not None else tuple(range(g.n))
    labels = tuple(itertools.product(gl, repeat=r))
    return Graph(total, edges, labels)


def subdivide(g: Graph, s: int) -> Graph:
    """Replace every edge by a path with s edges.

    Original vertices keep their indices; the s-1 inner vertices of the edge
    at position e in g.edges() are n + e*(s-1) ... n + (e+1)*(s-1) - 1, in
    order from the smaller endpoint.
    """
    if s < 1:
        raise errors.ParameterError(f"subdivision factor must be >= 1, got {s}")
    if s == 1:
        return Graph(g.n, g.edges(), g.labels)
    edges: list[tuple[int, int]] = []
    nxt = g.n
    for u, v in g.edges():
        chain = [u] + list(range(nxt, nxt + s - 1)) + [v]
        nxt += s - 1
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, edges)


def find_hamilton_path(g: Graph, max_vertices: int | None = None) -> list[int] | None:
    """Hamilton path by bitmask DP, or None if none exists.

    ends[mask] holds the set of vertices at which some path covering exactly
    mask can end.  Memory is 2^n ints, so the vertex budget is a hard guard.
    Reconstruction always picks the lowest admissible vertex, so the result
    is deterministic.
    """
    limit = max_vertices if max_vertices is not None else config.HAMILTON_MAX_VERTICES
    n = g.n
    if n > limit:
        raise errors.BudgetExceededError(
            f"hamilton path DP is limited to {limit} vertices, got {n}"
        )
    if n == 1:
        return [0]
    rows = g.bitrows
    size = 1 << n
    ends = [0] * size
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, size):
        e = ends[mask]
        if not e:
            continue
        while e:
            v = (e & -e).bit_length() - 1
            e &= e - 1
            ext = rows[v] & ~mask
            while ext:
                w = (ext & -ext).bit_length() - 1
                ext &= ext - 1
                ends[mask | (1 << w)] |= 1 << w
    full = size - 1
    if ends[full] == 0:
        return None
    v = (ends[full] & -ends[full]).bit_length() - 1
    path = [v]
    mask = full
    while mask != 1 << v:
        pm = mask ^ (1 << v)
        cands = ends[pm] & rows[v]
        u = (cands & -cands).bit_length() - 1
        path.append(u)
        mask = pm
        v = u
    path.reverse()
    return path


def canonical_form(g: Graph) -> bytes:
    """Lexicographically minimal adjacency bit-string over all relabelings.

    The string lists the upper triangle column by column: (0,1), (0,2),
    (1,2), (0,3), ..., one byte (0 or 1) per pair.  Placing the vertex for
    position j reveals exactly column j, which lets a branch-and-bound walk
    prune any prefix already beaten by the best complete string.
    """
    n = g.n
    if n <= 1:
        return b""
    rows = g.bitrows
    best: list[int] | None = None
    placed: list[int] = []
    bits: list[int] = []
    used = [False] * n

    def walk(tight: bool) -> None:
        nonlocal best
        j = len(placed)
        if j == n:
            if best is None or bits < best:
                best = bits.copy()
            return
        pos = len(bits)
        ranked = []
        for v in range(n):
            if used[v]:
                continue
            col = tuple((rows[placed[i]] >> v) & 1 for i in range(j))
            ranked.append((col, v))
        ranked.sort()
        for col, v in ranked:
            branch_tight = tight
            if best is not None and branch_tight:
                seg = best[pos : pos + j]
                lcol = list(col)
                if lcol > seg:
                    continue
                if lcol < seg:
                    branch_tight = False
            used[v] = True
            placed.append(v)
            bits.extend(col)
            walk(branch_tight)
            del bits[pos:]
            placed.pop()
            used[v] = False

    walk(True)
    return bytes(best)


def enumerate_connected_graphs(
    n: int, max_vertices: int | None = None
) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n
    vertices, in sorted canonical-form order.

    Builds all classes level by level: every k-vertex graph arises from some
    (k-1)-vertex graph by attaching a new vertex to one neighborhood subset,
    so growing out of all (k-1)-classes and deduplicating by canonical form
    covers every class.  Intermediate levels must keep disconnected graphs
    (deleting a vertex of a connected graph may disconnect it).
    """
    limit = max_vertices if max_vertices is not None else config.ENUMERATION_MAX_VERTICES
    if n < 1:
        raise errors.ParameterError(f"need n >= 1, got {n}")
    if n > limit:
        raise errors.BudgetExceededError(
            f"exhaustive enumeration is limited to {limit} vertices, got {n}"
        )
    return _enumerate_connected(n)


def _enumerate_connected(n: int) -> Iterator[Graph]:
    reps: dict[bytes, Graph] = {canonical_form(Graph(1, [])): Graph(1, [])}
    for k in range(2, n + 1):
        grown: dict[bytes, Graph] = {}
        for g in reps.values():
            base = list(g.edges())
            for subset in range(1 << (k - 1)):
                extra = [(v, k - 1) for v in range(k - 1) if subset >> v & 1]
                h = Graph(k, base + extra)
                key = canonical_form(h)
                if key not in grown:
                    grown[key] = h
        reps = grown
    for key in sorted(reps):
        g = reps[key]
        if g.is_connected():
            yield g


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and g.is_connected()


def tree_spread_and_diameter(g: Graph) -> tuple[int, int]:
    """(spread, diameter) of a tree.

    Spread is the minimum distance over distinct leaf pairs; a path reports
    its length, a single vertex reports (0, 0).
    """
    if not is_tree(g):
        raise errors.NotATreeError("spread is defined for trees only")
    if g.n == 1:
        return 0, 0
    dist = g.distances()
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    spread = min(dist.d(u, v) for u, v in itertools.combinations(leaves, 2))
    diameter = max(dist.d(u, v) for u, v in itertools.combinations(leaves, 2))
    return spread, diameter


def _wl_colors(g: Graph) -> tuple[int, ...]:
    """Stable colors under iterated neighborhood refinement."""
    colors = list(g.degrees())
    classes = len(set(colors))
    while True:
        table: dict[tuple, int] = {}
        fresh = []
        for v in range(g.n):
            sig = (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            fresh.append(table.setdefault(sig, len(table)))
        if len(table) == classes:
            return tuple(fresh)
        colors = fresh
        classes = len(table)


def _search_order(g: Graph, start: int) -> list[int]:
    # BFS order keeps each new vertex adjacent to a mapped one when possible.
    order = [start]
    seen = {start}
    queue = [start]
    while queue:
        u = queue.pop(0)
        for v in g.neighbors(u):
            if v not in seen:
                seen.add(v)
                order.append(v)
                queue.append(v)
    for v in range(g.n):
        if v not in seen:
            order.append(v)
    return order


def _find_automorphism(
    g: Graph, colors: tuple[int, ...], a: int, b: int
) -> dict[int, int] | None:
    """Some automorphism mapping a to b, or None if there is none."""
    if colors[a] != colors[b]:
        return None
    order = _search_order(g, a)
    image: dict[int, int] = {}
    used = [False] * g.n

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        candidates = [b] if v == a else [
            w for w in range(g.n) if not used[w] and colors[w] == colors[v]
        ]
        for w in candidates:
            if used[w]:
                continue
            ok = True
            for u, x in image.items():
                if g.has_edge(u, v) != g.has_edge(x, w):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                del image[v]
        return False

    if extend(0):
        return dict(image)
    return None


def automorphism_orbits(g: Graph) -> list[tuple[int, ...]]:
    """Vertex orbits under the full automorphism group.

    Color refinement splits vertices that cannot be equivalent; a
    backtracking existence search settles each remaining pair exactly.
    """
    colors = _wl_colors(g)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    by_color: dict[int, list[int]] = {}
    for v in range(g.n):
        by_color.setdefault(colors[v], []).append(v)
    for group in by_color.values():
        anchor = group[0]
        for other in group[1:]:
            if find(anchor) == find(other):
                continue
            image = _find_automorphism(g, colors, anchor, other)
            if image is not None:
                for v, w in image.items():
                    union(v, w)
    orbits: dict[int, list[int]] = {}
    for v in range(g.n):
        orbits.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(o)) for o in orbits.values())


def write_graph(g: Graph, path) -> None:
    """Write the text format: a header line "n m", then one "u v" line per
    edge, sorted, 0-based."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{g.n} {g.m}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def read_graph(path) -> Graph:
    """Read the text format written by write_graph, validating counts."""
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise errors.FormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise errors.FormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise errors.FormatError(f"header must be two integers, got {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise errors.FormatError(f"header promises {m} edges, file has {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise errors.FormatError(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise errors.FormatError(f"edge line must be two integers, got {ln!r}") from exc
        edges.append((u, v))
    try:
        g = Graph(n, edges)
    except errors.ParameterError as exc:
        raise errors.FormatError(str(exc)) from exc
    if g.m != m:
        raise errors.FormatError("duplicate or conflicting edges in file")
    return g


def to_dot(g: Graph, name: str = "g") -> str:
    """Graphviz source for quick visual inspection."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
