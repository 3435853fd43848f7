from __future__ import annotations

import pytest

from cupstack import errors, families
from cupstack.graphs import (
    all_pairs_distances,
    bipartition,
    canonical_form,
    is_tree,
    path_partition,
)


def test_path_cycle_complete_basics():
    assert families.path(1).m == 0
    assert families.path(6).degrees() == (1, 2, 2, 2, 2, 1)
    assert families.cycle(5).degrees() == (2,) * 5
    assert families.complete(5).m == 10
    with pytest.raises(errors.ParameterError):
        families.cycle(2)
    with pytest.raises(errors.ParameterError):
        families.path(0)


def test_complete_bipartite_layout():
    g = families.complete_bipartite(2, 4)
    assert (g.n, g.m) == (6, 8)
    # first class is 0..a-1
    assert g.degrees() == (4, 4, 2, 2, 2, 2)
    assert not g.has_edge(0, 1) and not g.has_edge(2, 3)
    with pytest.raises(errors.ParameterError):
        families.complete_bipartite(0, 3)


def test_star_and_spider():
    assert families.star(4) == families.complete_bipartite(1, 4)
    sp = families.spider(2, 2, 2)
    assert (sp.n, sp.m) == (7, 6)
    assert is_tree(sp)
    assert sp.degree(0) == 3
    # legs numbered consecutively: first leg 1,2 then 3,4 then 5,6
    assert sp.has_edge(0, 1) and sp.has_edge(1, 2)
    assert sp.has_edge(0, 3) and sp.has_edge(3, 4)
    with pytest.raises(errors.ParameterError):
        families.spider(2, 0)


def test_double_star():
    g = families.double_star(3, 2)
    assert (g.n, g.m) == (7, 6)
    assert g.degree(0) == 4 and g.degree(1) == 3
    assert is_tree(g)


def test_hypercube():
    q3 = families.hypercube(3)
    assert (q3.n, q3.m) == (8, 12)
    assert q3.degrees() == (3,) * 8
    assert all_pairs_distances(q3).diameter() == 3
    bipartition(q3)  # must not raise
    assert families.hypercube(1) == families.path(2)


def test_grid():
    g = families.grid(2, 3)
    assert (g.n, g.m) == (6, 7)
    assert canonical_form(families.grid(2, 2, 2)) == canonical_form(
        families.hypercube(3)
    )
    assert canonical_form(families.grid(4)) == canonical_form(families.path(4))


def test_kneser_and_petersen():
    pet = families.petersen()
    assert (pet.n, pet.m) == (10, 15)
    assert pet.degrees() == (3,) * 10
    assert all_pairs_distances(pet).diameter() == 2
    assert canonical_form(families.kneser(5, 2)) == canonical_form(pet)
    # labels are the underlying 2-subsets
    assert all(len(lbl) == 2 for lbl in pet.labels)
    with pytest.raises(errors.ParameterError):
        families.kneser(4, 2)  # needs n >= 2k + 1


def test_johnson():
    g = families.johnson(5, 2, 1)
    assert (g.n, g.m) == (10, 30)
    assert g.degrees() == (6,) * 10
    # s = 0 is the disjointness graph
    assert families.johnson(5, 2, 0) == families.kneser(5, 2)
    with pytest.raises(errors.ParameterError):
        families.johnson(5, 2, 2)
    with pytest.raises(errors.ParameterError):
        families.johnson(4, 2, 0)  # too small to be connected


def test_biwheel_structure():
    g = families.biwheel(6, (1, 4))
    assert (g.n, g.m) == (13, 16)
    assert g.degree(0) == 6  # hub sees every x_i
    # spoke x_1 - y_1 removed, x_2 - y_2 kept
    assert not g.has_edge(1, 7) and g.has_edge(2, 8)
    # rim edge y_i - x_{i+1}, wrapping at l
    assert g.has_edge(7, 2) and g.has_edge(12, 1)
    with pytest.raises(errors.ParameterError):
        families.biwheel(6, (0,))
    with pytest.raises(errors.ParameterError):
        families.biwheel(6, (7,))
    with pytest.raises(errors.ParameterError):
        families.biwheel(1)


def test_biwheel_large_instance_shape():
    g = families.biwheel(24, (1, 9, 17))
    assert g.n == 49
    assert all_pairs_distances(g).diameter() == 4
    paths = families.biwheel_paths(24, (1, 9, 17))
    assert len(paths) == 3
    assert all(len(p) == 16 for p in paths)


def test_biwheel_paths_cover_rim():
    l, removed = 6, (1, 4)
    paths = families.biwheel_paths(l, removed)
    g = families.biwheel(l, removed)
    covered = sorted(v for p in paths for v in p)
    assert covered == list(range(1, 2 * l + 1))  # everything but the hub
    for p in paths:
        assert all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))
        # starts just after a removed spoke's y, ends at the next one's x
        assert p[0] > l and p[-1] <= l


def test_biwheel_partition_is_valid_and_hub_on_target_path():
    l, removed = 6, (1, 4)
    g = families.biwheel(l, removed)
    for t in range(g.n):
        pp = families.biwheel_partition(l, removed, t)
        pp = path_partition(g, pp)  # validates cover and adjacency
        first = list(pp)[0]
        # the hub rides on the target's path, which is listed first
        assert 0 in first
        if t != 0:
            assert t in first


def test_cactus_counts():
    g = families.cactus(families.complete(2), 5)
    assert (g.n, g.m) == (12, 11)
    assert is_tree(g)
    assert g.degree(0) == 6 and g.degree(1) == 6
    g = families.cactus(families.cycle(4), 2)
    assert (g.n, g.m) == (12, 12)
    with pytest.raises(errors.ParameterError):
        families.cactus(families.complete(2), 0)


def test_f_graph_shape():
    g = families.f_graph(10)
    assert (g.n, g.m) == (10, 9)
    assert is_tree(g)
    assert g.degree(7) == 3  # path end carrying both pendant leaves
    assert g.degree(8) == 1 and g.degree(9) == 1
    a, b = bipartition(g).classes
    assert {len(a), len(b)} == {4, 6}
    with pytest.raises(errors.ParameterError):
        families.f_graph(2)


def test_spiky_shape():
    g = families.spiky(11, [3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3])
    assert g.n == 17
    assert g.m == 55 + 6
    assert g.degree(0) == 13 and g.degree(10) == 13
    assert sorted(g.degrees())[:6] == [1] * 6
    with pytest.raises(errors.ParameterError):
        families.spiky(4, [1, 0, 0, 0])  # bundle of one or two is too small
    with pytest.raises(errors.ParameterError):
        families.spiky(4, [3, 0, 0, 0])  # needs two nonzero bundles
    with pytest.raises(errors.ParameterError):
        families.spiky(4, [3, 3])  # one entry per clique vertex


def test_connectivity_gadget():
    g = families.connectivity_gadget(2)
    assert g.n == 24
    assert all_pairs_distances(g).diameter() == 3
    # the two K_{c,c} classes have degree c + 5c
    assert g.degree(0) == 12 and g.degree(2) == 12
    with pytest.raises(errors.ParameterError):
        families.connectivity_gadget(0)


def test_strong_nonmono_pair_nesting():
    sub, host = families.strong_nonmono_pair()
    assert sub.n == host.n == 17
    assert sub.edge_set() < host.edge_set()
    assert is_tree(sub)


def test_bipartite_completion():
    g = families.bipartite_completion(families.f_graph(10))
    assert (g.n, g.m) == (10, 24)
    assert canonical_form(g) == canonical_form(families.complete_bipartite(4, 6))
    # original edges survive
    assert families.f_graph(10).edge_set() <= g.edge_set()
    with pytest.raises(errors.NotBipartiteError):
        families.bipartite_completion(families.cycle(3))


def test_build_family_dispatch():
    assert families.build_family("path", n=4) == families.path(4)
    assert families.build_family("petersen") == families.petersen()
    with pytest.raises(errors.ParameterError):
        families.build_family("frobnicate")
