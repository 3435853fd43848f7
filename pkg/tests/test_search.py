from __future__ import annotations

import random

import pytest

import oracles
from cupstack import errors, families
from cupstack.engine import verify_sequence
from cupstack.graphs import Graph, all_pairs_distances, enumerate_connected_graphs, find_hamilton_path
from cupstack.search import (
    census_stackable_nonhamiltonian,
    decide_stackable,
    decide_t_stackable,
    find_alternating_chain,
    min_weight,
    weight_table,
)


def test_decide_matches_naive_dfs_on_all_small_graphs():
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            for t in range(g.n):
                res = decide_t_stackable(g, t)
                assert res.verdict is oracles.naive_decide(g, t), (g, t)
                if res.verdict:
                    assert bool(verify_sequence(g, t, res.witness))


def test_decide_stackable_classifications():
    assert decide_stackable(families.path(5)).classification == "stackable"
    assert decide_stackable(families.star(3)).classification == "non-stackable"
    assert (
        decide_stackable(families.double_star(3, 3)).classification
        == "strongly-non-stackable"
    )


def test_decide_stackable_report_shape():
    report = decide_stackable(families.path(4))
    assert [r.target for r in report.results] == [0, 1, 2, 3]
    assert report.result_for(2).verdict is True
    assert report.explored > 0
    for r in report.results:
        assert bool(verify_sequence(families.path(4), r.target, r.witness))


def test_decide_stackable_targets_subset():
    report = decide_stackable(families.path(6), targets=[0, 3])
    assert [r.target for r in report.results] == [0, 3]


def test_decide_stackable_symmetry_reduction_matches_full_run():
    g = families.petersen()
    full = decide_stackable(g)
    reduced = decide_stackable(g, symmetry=True)
    assert [r.verdict for r in full.results] == [r.verdict for r in reduced.results]
    # only orbit representatives carry witnesses
    assert sum(1 for r in reduced.results if r.witness is not None) == 1


def test_decide_stackable_parallel_workers_identical():
    g = families.cycle(7)
    solo = decide_stackable(g, workers=1)
    multi = decide_stackable(g, workers=2)
    assert [r.verdict for r in solo.results] == [r.verdict for r in multi.results]
    assert [r.witness for r in solo.results] == [r.witness for r in multi.results]


def test_decide_budget_exhaustion_reports_unknown():
    g = families.petersen()
    res = decide_t_stackable(g, 0, budget=5)
    assert res.verdict is None
    report = decide_stackable(g, budget=5)
    assert report.classification == "unknown"


def test_min_weight_path_values():
    g = families.path(6)
    assert min_weight(g, 0).mu == 9
    assert min_weight(g, 3).mu == 7


def test_min_weight_witness_is_optimal_weight():
    g = families.cycle(6)
    res = min_weight(g, 2)
    assert res.witness.weight == res.mu
    assert bool(verify_sequence(g, 2, res.witness))


def test_min_weight_matches_naive_minimum_on_small_graphs():
    cases = []
    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            cases.append(g)
    for g in cases:
        for t in range(g.n):
            if not oracles.naive_decide(g, t):
                with pytest.raises(errors.NotStackableError):
                    min_weight(g, t)
                continue
            assert min_weight(g, t).mu == oracles.naive_min_weight(g, t)


def test_min_weight_below_any_random_playout():
    rng = random.Random(313)
    from cupstack.engine import apply_move, initial_state, legal_moves

    g = families.path(7)
    dist = all_pairs_distances(g)
    best = min_weight(g, 3).mu
    wins = 0
    for _ in range(300):
        state = initial_state(g)
        weight = 0
        while True:
            moves = legal_moves(g, dist, state)
            if not moves:
                break
            m = rng.choice(moves)
            state = apply_move(g, dist, state, m)
            weight += m.cups
        if state.cups[3] == g.n:
            wins += 1
            assert weight >= best
    assert wins > 0


def test_min_weight_budget():
    with pytest.raises(errors.BudgetExceededError):
        min_weight(families.path(8), 0, budget=3)


def test_min_weight_rejects_unstackable_target():
    with pytest.raises(errors.NotStackableError):
        min_weight(families.star(3), 1)


def test_weight_table_rows():
    assert weight_table(families.path(5)).mu == (6, 5, 6, 5, 6)
    assert weight_table(families.path(6)).mu == (9, 7, 7, 7, 7, 9)
    table = weight_table(families.path(7))
    assert table.csv_row() == "11,10,9,8,9,10,11"
    for t, wit in enumerate(table.witnesses):
        assert wit.weight == table.mu[t]


def test_weight_table_single_vertex():
    assert weight_table(families.path(1)).mu == (0,)
    assert weight_table(families.path(1)).csv_row() == "0"


def test_census_empty_through_five_vertices():
    found = census_stackable_nonhamiltonian(5)
    assert all(found[n] == [] for n in range(1, 6))


def test_census_six_vertex_entries_are_genuine():
    found = census_stackable_nonhamiltonian(6)
    graphs = found[6]
    assert len(graphs) == 4
    for g in graphs:
        assert find_hamilton_path(g) is None
        assert decide_stackable(g).classification == "stackable"


def test_find_alternating_chain_on_completion():
    base = families.f_graph(10)
    sup = families.bipartite_completion(base)
    chain = find_alternating_chain(base, sup, 3)
    assert chain is not None
    assert len(chain) == 3
    # verdicts flip at every prefix: stackable, non, stackable, non
    edges = list(base.edges())
    expect = False
    for e in chain:
        assert e in sup.edge_set() and e not in base.edge_set()
        edges.append(e)
        g = Graph(base.n, edges)
        res = decide_stackable(g)
        is_stackable = res.classification == "stackable"
        assert is_stackable == expect
        expect = not expect


def test_find_alternating_chain_rejects_impossible_length():
    base = families.path(5)
    with pytest.raises(errors.ParameterError):
        find_alternating_chain(base, base, 1)  # no extra edges to add


def test_find_alternating_chain_validates_inputs():
    with pytest.raises(errors.ParameterError):
        find_alternating_chain(families.path(5), families.path(6), 1)
    with pytest.raises(errors.ParameterError):
        find_alternating_chain(families.cycle(5), families.path(5), 1)
