"""Exhaustive searches: stackability decisions, minimum move weight, census
runs, and alternating edge chains.

All searches run on the selected kernel backend (compiled when available)
and share three honesty rules: witnesses are re-verified against the game
rule before being returned, budget exhaustion reports "unknown" rather than
a verdict, and a definitive negative is only reported after a completed
exhaustive search.
"""

from __future__ import annotations

from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import config, errors
from ._backend import backend_name, kernel
from .engine import Move, MoveSequence, verify_sequence
from .graphs import (
    DistanceMatrix,
    Graph,
    automorphism_orbits,
    enumerate_connected_graphs,
    find_hamilton_path,
)

__all__ = [
    "TargetResult",
    "StackabilityReport",
    "MinWeightResult",
    "WeightTable",
    "decide_t_stackable",
    "decide_stackable",
    "min_weight",
    "weight_table",
    "census_stackable_nonhamiltonian",
    "find_alternating_chain",
    "backend_name",
]


@dataclass(frozen=True)
class TargetResult:
    """Search outcome for one target: verdict True/False, or None when the
    budget ran out before the search finished."""

    target: int
    verdict: bool | None
    witness: MoveSequence | None
    explored: int
    memo_hits: int


@dataclass(frozen=True)
class StackabilityReport:
    results: tuple[TargetResult, ...]

    def result_for(self, t: int) -> TargetResult:
        for r in self.results:
            if r.target == t:
                return r
        raise KeyError(t)

    @property
    def classification(self) -> str:
        verdicts = [r.verdict for r in self.results]
        if all(v is True for v in verdicts):
            return "stackable"
        if all(v is False for v in verdicts):
            return "strongly-non-stackable"
        if any(v is False for v in verdicts):
            return "non-stackable"
        return "unknown"

    @property
    def explored(self) -> int:
        return sum(r.explored for r in self.results)

    @property
    def memo_hits(self) -> int:
        return sum(r.memo_hits for r in self.results)


def _flat_distances(g: Graph, dist: DistanceMatrix | None) -> bytes:
    if dist is None:
        dist = g.distances()
    return dist.flat_bytes()


def _verified_witness(g: Graph, t: int, raw_moves) -> MoveSequence:
    seq = MoveSequence(tuple(Move(a, b, c) for a, b, c in raw_moves))
    verdict = verify_sequence(g, t, seq)
    if not verdict:
        raise RuntimeError(
            f"search kernel produced an invalid witness: {verdict.reason}"
        )
    return seq


def decide_t_stackable(
    g: Graph, t: int, budget: int | None = None, dist: DistanceMatrix | None = None
) -> TargetResult:
    """Decide whether all cups can be stacked onto t.

    Depth-first search over cup-count states with a memoized failure set.
    A True verdict carries a verified witness; a False verdict means the
    reachable state space was exhausted within budget.
    """
    if not 0 <= t < g.n:
        raise errors.ParameterError(f"target {t} out of range")
    flat = _flat_distances(g, dist)
    limit = config.decide_budget(budget)
    status, raw, explored, hits = kernel.decide_target(g.n, flat, t, limit)
    if status == 1:
        return TargetResult(t, True, _verified_witness(g, t, raw), explored, hits)
    if status == 0:
        return TargetResult(t, False, None, explored, hits)
    return TargetResult(t, None, None, explored, hits)


def _decide_worker(args: tuple[int, bytes, int, int]):
    n, flat, t, limit = args
    return t, kernel.decide_target(n, flat, t, limit)


def decide_stackable(
    g: Graph,
    budget: int | None = None,
    workers: int = 1,
    symmetry: bool = False,
    targets: Iterable[int] | None = None,
) -> StackabilityReport:
    """Per-target stackability for all (or the given) targets.

    With symmetry=True only one representative per automorphism orbit is
    searched and its verdict is copied to the rest of the orbit (witnesses
    are only attached to the representatives).  workers > 1 distributes
    targets over processes; per-target searches are independent and
    deterministic, so the report does not depend on the worker count.
    """
    if targets is None:
        target_list = list(range(g.n))
    else:
        target_list = sorted(set(targets))
    flat = _flat_distances(g, None)
    limit = config.decide_budget(budget)

    rep_of = {t: t for t in target_list}
    if symmetry:
        for orbit in automorphism_orbits(g):
            members = [t for t in target_list if t in orbit]
            for t in members:
                rep_of[t] = members[0]
    reps = sorted(set(rep_of.values()))

    raw_results: dict[int, tuple] = {}
    if workers > 1 and len(reps) > 1:
        jobs = [(g.n, flat, t, limit) for t in reps]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for t, res in pool.map(_decide_worker, jobs):
                raw_results[t] = res
    else:
        for t in reps:
            raw_results[t] = kernel.decide_target(g.n, flat, t, limit)

    results = []
    for t in target_list:
        rep = rep_of[t]
        status, raw, explored, hits = raw_results[rep]
        if status == 1:
            witness = _verified_witness(g, rep, raw) if t == rep else None
            results.append(TargetResult(t, True, witness, explored, hits))
        elif status == 0:
            results.append(TargetResult(t, False, None, explored, hits))
        else:
            results.append(TargetResult(t, None, None, explored, hits))
    return StackabilityReport(tuple(results))


@dataclass(frozen=True)
class MinWeightResult:
    target: int
    mu: int
    witness: MoveSequence
    explored: int


def min_weight(
    g: Graph, t: int, budget: int | None = None, dist: DistanceMatrix | None = None
) -> MinWeightResult:
    """Minimum total cups moved over all sequences stacking everything on t.

    Uniform-cost search with move cost equal to the stack size moved.
    Raises NotStackableError when t admits no stacking at all, and
    BudgetExceededError when the state cap is hit first.
    """
    if not 0 <= t < g.n:
        raise errors.ParameterError(f"target {t} out of range")
    flat = _flat_distances(g, dist)
    limit = config.min_weight_budget(budget)
    status, mu, raw, explored = kernel.min_weight_target(g.n, flat, t, limit)
    if status == 2:
        raise errors.BudgetExceededError(
            f"minimum-weight search hit the state cap of {limit}"
        )
    if status == 0:
        raise errors.NotStackableError(f"no sequence stacks this graph onto {t}")
    witness = _verified_witness(g, t, raw)
    if witness.weight != mu:
        raise RuntimeError("kernel cost does not match witness weight")
    return MinWeightResult(t, mu, witness, explored)


@dataclass(frozen=True)
class WeightTable:
    """Minimum weights for every target of one graph."""

    mu: tuple[int, ...]
    witnesses: tuple[MoveSequence, ...]

    def csv_row(self) -> str:
        return ",".join(str(v) for v in self.mu)


def weight_table(g: Graph, budget: int | None = None) -> WeightTable:
    """Per-target minimum weights; requires the graph stackable onto every
    target."""
    dist = g.distances()
    values = []
    witnesses = []
    for t in range(g.n):
        res = min_weight(g, t, budget, dist)
        values.append(res.mu)
        witnesses.append(res.witness)
    return WeightTable(tuple(values), tuple(witnesses))


def _stackable_everywhere(g: Graph, limit: int) -> bool:
    """True if every target verdict is yes, False if any is definitively no.

    Raises BudgetExceededError when a verdict would rest on an unfinished
    search.
    """
    flat = g.distances().flat_bytes()
    unknown = False
    for t in range(g.n):
        status, _, _, _ = kernel.decide_target(g.n, flat, t, limit)
        if status == 0:
            return False
        if status == 2:
            unknown = True
    if unknown:
        raise errors.BudgetExceededError(
            "stackability undecided within budget; raise CUPSTACK_BUDGET"
        )
    return True


def census_stackable_nonhamiltonian(
    max_n: int, budget: int | None = None
) -> dict[int, list[Graph]]:
    """For each n <= max_n, the connected graphs (up to isomorphism) that
    are stackable but have no Hamilton path.

    Stackability of a traceable graph is immediate, so only candidates
    without a Hamilton path are searched.
    """
    limit = config.decide_budget(budget)
    found: dict[int, list[Graph]] = {}
    for n in range(1, max_n + 1):
        hits = []
        for g in enumerate_connected_graphs(n):
            if find_hamilton_path(g) is not None:
                continue
            if _stackable_everywhere(g, limit):
                hits.append(g)
        found[n] = hits
    return found


def find_alternating_chain(
    g_base: Graph,
    g_super: Graph,
    length: int,
    budget: int | None = None,
) -> list[tuple[int, int]] | None:
    """Edges e_1..e_length from E(g_super) - E(g_base) such that adding them
    one at a time flips the stackable / non-stackable status at every step.

    Backtracking over edge orders in lexicographic order; statuses of
    intermediate graphs are memoized by edge set, since different orders
    reach the same graph.  Returns the first chain found, or None when the
    search space is exhausted.
    """
    if g_base.n != g_super.n:
        raise errors.ParameterError("base and super graph must share a vertex set")
    extra = sorted(g_super.edge_set() - g_base.edge_set())
    if not g_base.edge_set() <= g_super.edge_set():
        raise errors.ParameterError("base graph must be a subgraph of the super graph")
    if length < 1 or length > len(extra):
        raise errors.ParameterError(
            f"chain length must be in 1..{len(extra)}, got {length}"
        )
    limit = config.decide_budget(budget)
    status_cache: dict[frozenset, bool] = {}

    def status(edges: frozenset) -> bool:
        if edges not in status_cache:
            status_cache[edges] = _stackable_everywhere(
                Graph(g_base.n, edges), limit
            )
        return status_cache[edges]

    base_edges = g_base.edge_set()
    start = status(base_edges)
    chain: list[tuple[int, int]] = []

    def extend(edges: frozenset, want: bool) -> bool:
        if len(chain) == length:
            return True
        for e in extra:
            if e in edges:
                continue
            grown = edges | {e}
            if status(grown) != want:
                continue
            chain.append(e)
            if extend(grown, not want):
                return True
            chain.pop()
        return False

    if extend(frozenset(base_edges), not start):
        return chain
    return None
