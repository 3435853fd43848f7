"""Named graph families.

Every generator documents its vertex numbering so move sequences and
certificates can be read back against the construction.  Parameters are
validated against the family's documented range; violations raise
ParameterError naming the constraint.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Sequence

from . import errors
from .graphs import Graph, PathPartition, bipartition, cartesian_product, graph_power


def path(n: int) -> Graph:
    """Path 0 - 1 - ... - n-1."""
    if n < 1:
        raise errors.ParameterError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle 0 - 1 - ... - n-1 - 0."""
    if n < 3:
        raise errors.ParameterError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise errors.ParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; the first class is 0..a-1, the second a..a+b-1."""
    if a < 1 or b < 1:
        raise errors.ParameterError(f"complete bipartite needs a, b >= 1, got {a}, {b}")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    """K_{1,k}: center 0 with k leaves."""
    return complete_bipartite(1, k)


def spider(*leg_lengths: int) -> Graph:
    """Center 0 with one pendant path per leg, legs numbered consecutively."""
    if not leg_lengths:
        raise errors.ParameterError("spider needs at least one leg")
    if any(l < 1 for l in leg_lengths):
        raise errors.ParameterError("spider leg lengths must be >= 1")
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def double_star(a: int, b: int) -> Graph:
    """Adjacent centers 0 and 1 with a and b leaves respectively."""
    if a < 1 or b < 1:
        raise errors.ParameterError(f"double star needs a, b >= 1, got {a}, {b}")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + j) for j in range(b)]
    return Graph(2 + a + b, edges)


def hypercube(d: int) -> Graph:
    """d-dimensional hypercube as the d-th power of an edge; labels are bit
    tuples."""
    if d < 1:
        raise errors.ParameterError(f"hypercube needs d >= 1, got {d}")
    return graph_power(path(2), d, vertex_budget=1 << max(d, 1))


def grid(*dims: int) -> Graph:
    """Cartesian product of paths, one per dimension."""
    if not dims:
        raise errors.ParameterError("grid needs at least one dimension")
    factors = [path(d) for d in dims]
    return functools.reduce(cartesian_product, factors)


def kneser(n: int, k: int) -> Graph:
    """Disjointness graph on k-subsets of {0..n-1}.

    Vertices are labeled with the subsets in lexicographic order.  The
    connected regime n >= 2k + 1 is enforced.
    """
    if k < 1:
        raise errors.ParameterError(f"kneser needs k >= 1, got {k}")
    if n < 2 * k + 1:
        raise errors.ParameterError(
            f"kneser needs n >= 2k + 1 for connectivity, got n={n}, k={k}"
        )
    subsets = list(itertools.combinations(range(n), k))
    index = {s: i for i, s in enumerate(subsets)}
    edges = []
    for i, s in enumerate(subsets):
        ss = set(s)
        for t in subsets[i + 1 :]:
            if ss.isdisjoint(t):
                edges.append((i, index[t]))
    return Graph(len(subsets), edges, labels=subsets)


def johnson(n: int, k: int, s: int) -> Graph:
    """Graph on k-subsets of {0..n-1} with edges between subsets meeting in
    exactly s elements."""
    if not 0 <= s < k:
        raise errors.ParameterError(f"johnson needs 0 <= s < k, got s={s}, k={k}")
    lower = 2 * k - s + (1 if s == 0 else 0)
    if n < lower:
        raise errors.ParameterError(
            f"johnson needs n >= {lower} for connectivity with k={k}, s={s}, got n={n}"
        )
    subsets = list(itertools.combinations(range(n), k))
    index = {t: i for i, t in enumerate(subsets)}
    edges = []
    for i, a in enumerate(subsets):
        sa = set(a)
        for b in subsets[i + 1 :]:
            if len(sa.intersection(b)) == s:
                edges.append((i, index[b]))
    return Graph(len(subsets), edges, labels=subsets)


def petersen() -> Graph:
    return kneser(5, 2)


def _wrap(i: int, l: int) -> int:
    # spoke indices are 1-based and wrap modulo l
    return (i - 1) % l + 1


def biwheel(l: int, removed: Sequence[int] = ()) -> Graph:
    """Biwheel on 2l + 1 vertices: hub 0, x_i = i, y_i = l + i for i = 1..l.

    Edges are hub-x_i for every i, the spokes x_i - y_i, and y_i - x_{i+1}
    around the rim.  removed lists 1-based spoke indices whose x_i - y_i
    edge is deleted.
    """
    if l < 2:
        raise errors.ParameterError(f"biwheel needs l >= 2, got {l}")
    removed = frozenset(removed)
    if not removed <= set(range(1, l + 1)):
        raise errors.ParameterError(
            f"removed spokes must be 1-based indices in 1..{l}, got {sorted(removed)}"
        )
    edges = [(0, i) for i in range(1, l + 1)]
    for i in range(1, l + 1):
        if i not in removed:
            edges.append((i, l + i))
        edges.append((l + i, _wrap(i + 1, l)))
    return Graph(2 * l + 1, edges)


def biwheel_paths(l: int, removed: Sequence[int]) -> list[list[int]]:
    """The rim of a biwheel with removed spokes splits into one path per
    removed spoke; each runs from a y vertex to an x vertex."""
    cuts = sorted(set(removed))
    if not cuts:
        raise errors.ParameterError("rim paths need at least one removed spoke")
    paths = []
    for j, start in enumerate(cuts):
        end = cuts[(j + 1) % len(cuts)]
        gap = (end - start) % l or l
        verts = [l + start]
        for step in range(1, gap + 1):
            verts.append(_wrap(start + step, l))
            if step < gap:
                verts.append(l + _wrap(start + step, l))
        paths.append(verts)
    return paths


def biwheel_partition(l: int, removed: Sequence[int], t: int) -> PathPartition:
    """Path partition of a biwheel for target t: the hub is appended to the
    x end of the path holding t (any path if t is the hub), and that path is
    listed first."""
    paths = biwheel_paths(l, removed)
    if t == 0:
        chosen = 0
    else:
        chosen = next(i for i, p in enumerate(paths) if t in p)
    paths[chosen] = paths[chosen] + [0]
    paths.insert(0, paths.pop(chosen))
    return PathPartition(tuple(tuple(p) for p in paths))


def cactus(base: Graph, c: int) -> Graph:
    """base with c pendant edges attached to every vertex.

    Pendants of base vertex v are numbered base.n + v*c .. base.n + v*c + c-1.
    """
    if base.n < 2:
        raise errors.ParameterError(f"cactus base needs >= 2 vertices, got {base.n}")
    if c < 1:
        raise errors.ParameterError(f"cactus needs c >= 1 pendants per vertex, got {c}")
    edges = list(base.edges())
    for v in range(base.n):
        for j in range(c):
            edges.append((v, base.n + v * c + j))
    return Graph(base.n * (c + 1), edges)


def f_graph(n: int) -> Graph:
    """Path on n-2 vertices with two extra pendant edges on its far end.

    Vertices 0..n-3 form the path; n-2 and n-1 hang off vertex n-3.
    """
    if n < 3:
        raise errors.ParameterError(f"f_graph needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(n - 3)]
    edges += [(n - 3, n - 2), (n - 3, n - 1)]
    return Graph(n, edges)


def spiky(clique_size: int, pendants: Sequence[int]) -> Graph:
    """Clique with pendant-edge bundles: pendants[v] leaves hang off clique
    vertex v.

    Bundles must be empty or have at least three leaves, and at least two
    vertices must carry one; that is the regime in which the family is
    strongly non-stackable.  Leaves are numbered after the clique, grouped
    by owner in vertex order.
    """
    if clique_size < 2:
        raise errors.ParameterError(f"spiky needs a clique of >= 2 vertices, got {clique_size}")
    pendants = list(pendants)
    if len(pendants) != clique_size:
        raise errors.ParameterError(
            f"need one pendant count per clique vertex ({clique_size}), got {len(pendants)}"
        )
    if any(p != 0 and p < 3 for p in pendants):
        raise errors.ParameterError("each pendant bundle must be empty or have >= 3 leaves")
    if sum(1 for p in pendants if p) < 2:
        raise errors.ParameterError("at least two clique vertices need a pendant bundle")
    edges = list(itertools.combinations(range(clique_size), 2))
    nxt = clique_size
    for v, count in enumerate(pendants):
        for _ in range(count):
            edges.append((v, nxt))
            nxt += 1
    return Graph(nxt, edges)


def connectivity_gadget(c: int) -> Graph:
    """K_{c,c} with a K_{c,5c} glued onto each of its classes.

    Classes of the central K_{c,c} are 0..c-1 and c..2c-1; the 5c outer
    vertices attached to the first class are 2c..7c-1, those attached to the
    second are 7c..12c-1.  Connected, diameter 3, strongly non-stackable for
    every c >= 1.
    """
    if c < 1:
        raise errors.ParameterError(f"connectivity gadget needs c >= 1, got {c}")
    edges = [(i, c + j) for i in range(c) for j in range(c)]
    for u in range(2 * c, 7 * c):
        edges += [(i, u) for i in range(c)]
    for u in range(7 * c, 12 * c):
        edges += [(c + i, u) for i in range(c)]
    return Graph(12 * c, edges)


def strong_nonmono_pair() -> tuple[Graph, Graph]:
    """A nested pair on 17 vertices: the subgraph is stackable, the host is
    strongly non-stackable.

    The host is an 11-clique with three leaves on each of vertices 0 and 10
    (leaves 11..13 and 14..16).  The subgraph keeps only the clique edges
    forming the path 0 - 1 - ... - 10, so it is that path with the same two
    leaf bundles.
    """
    host = spiky(11, [3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3])
    sub_edges = [(i, i + 1) for i in range(10)]
    sub_edges += [(0, 11), (0, 12), (0, 13), (10, 14), (10, 15), (10, 16)]
    return Graph(17, sub_edges), host


def bipartite_completion(g: Graph) -> Graph:
    """Complete bipartite graph over g's own two-coloring, on the same
    vertex numbering; contains g by construction."""
    classes = bipartition(g).classes
    edges = [(u, v) for u in classes[0] for v in classes[1]]
    return Graph(g.n, edges, g.labels)


BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "spider": spider,
    "double_star": double_star,
    "hypercube": hypercube,
    "grid": grid,
    "kneser": kneser,
    "johnson": johnson,
    "petersen": petersen,
    "biwheel": biwheel,
    "f": f_graph,
    "spiky": spiky,
    "connectivity_gadget": connectivity_gadget,
}


def build_family(name: str, *args, **kwargs) -> Graph:
    """Dispatch to a named generator; unknown names raise ParameterError."""
    try:
        builder = BUILDERS[name]
    except KeyError:
        known = ", ".join(sorted(BUILDERS))
        raise errors.ParameterError(f"unknown family {name!r}; known: {known}") from None
    return builder(*args, **kwargs)
