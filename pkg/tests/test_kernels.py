from __future__ import annotations

import random

import pytest

import oracles
from cupstack import families
from cupstack import _kernel_py
from cupstack._backend import compiled_available

if compiled_available():
    from cupstack import _speedups
else:  # pragma: no cover
    _speedups = None

needs_compiled = pytest.mark.skipif(
    not compiled_available(), reason="compiled backend not built"
)


def flat_dist(g):
    return g.distances().flat_bytes()


def battery():
    rng = random.Random(60)
    graphs = [
        families.path(6),
        families.path(9),
        families.cycle(8),
        families.star(4),
        families.double_star(2, 3),
        families.complete_bipartite(2, 4),
        families.petersen(),
        families.spider(2, 2, 2),
    ]
    for _ in range(12):
        n = rng.randint(2, 9)
        graphs.append(oracles.random_connected_graph(rng, n, rng.randint(0, n)))
    return graphs


def test_python_backend_decide_agrees_with_naive_oracle():
    for g in battery():
        if g.n > 7:
            continue
        dist = flat_dist(g)
        for t in range(g.n):
            status, moves, explored, memo = _kernel_py.decide_target(
                g.n, dist, t, 10**6
            )
            assert (status == 1) == oracles.naive_decide(g, t)


@needs_compiled
def test_backends_agree_on_decide():
    for g in battery():
        dist = flat_dist(g)
        for t in range(g.n):
            py = _kernel_py.decide_target(g.n, dist, t, 10**6)
            cc = _speedups.decide_target(g.n, dist, t, 10**6)
            assert py == cc, (g, t)


@needs_compiled
def test_backends_agree_on_min_weight():
    for g in battery():
        if g.n > 8:
            continue
        dist = flat_dist(g)
        for t in range(g.n):
            py = _kernel_py.min_weight_target(g.n, dist, t, 10**6)
            cc = _speedups.min_weight_target(g.n, dist, t, 10**6)
            assert py == cc, (g, t)


def csr(g):
    starts, targets = [0], []
    for v in range(g.n):
        targets.extend(g.neighbors(v))
        starts.append(len(targets))
    return starts, targets


@needs_compiled
def test_backends_agree_on_bfs():
    for g in battery():
        starts, targets = csr(g)
        py = _kernel_py.all_pairs_bfs(g.n, starts, targets)
        cc = _speedups.all_pairs_bfs(g.n, starts, targets)
        assert [list(r) for r in py] == [list(r) for r in cc]


@needs_compiled
def test_backends_agree_under_tiny_budgets():
    g = families.petersen()
    dist = flat_dist(g)
    for budget in (0, 1, 2, 5, 17, 100):
        py = _kernel_py.decide_target(g.n, dist, 0, budget)
        cc = _speedups.decide_target(g.n, dist, 0, budget)
        assert py == cc
        pym = _kernel_py.min_weight_target(g.n, dist, 0, budget)
        ccm = _speedups.min_weight_target(g.n, dist, 0, budget)
        assert pym == ccm


@needs_compiled
def test_compiled_rejects_oversized_graphs():
    with pytest.raises(ValueError):
        _speedups.decide_target(300, bytes(300 * 300), 0, 10)


def test_decide_budget_status():
    g = families.petersen()
    dist = flat_dist(g)
    status, moves, explored, memo = _kernel_py.decide_target(g.n, dist, 0, 3)
    assert status == 2
    assert explored <= 4


def test_min_weight_unstackable_status():
    g = families.star(3)
    dist = flat_dist(g)
    status, mu, moves, popped = _kernel_py.min_weight_target(g.n, dist, 1, 10**6)
    assert status == 0
