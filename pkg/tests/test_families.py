import itertools

import networkx as nx
import pytest

from graphgrab import families as fam
from graphgrab.families import (
    BaseGraph,
    GeneratorConfig,
    attach_trees,
    build_blowup,
    class_neighborhood,
    cycle_base,
    path_base,
    quotient_edges,
    remainder_shape,
)
from graphgrab.graph import ContractError, is_connected, mask_of, members, neighborhood, roots_cover, two_coloring


def as_nx(g):
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    return h


def blowup_invariants(pg):
    g = pg.graph
    for i, j in itertools.combinations(range(len(pg.classes)), 2):
        for x in members(pg.classes[i]):
            for y in members(pg.classes[j]):
                assert g.adjacent(x, y) == pg.base.adjacent(i, j)
    for c in pg.classes:
        for x, y in itertools.combinations(members(c), 2):
            assert not g.adjacent(x, y)


def test_blowup_examples():
    pg = build_blowup(path_base(2), [2, 1])
    assert pg.graph.edges() == [(0, 2), (1, 2)]
    k23 = build_blowup(path_base(2), [2, 3])
    assert nx.is_isomorphic(as_nx(k23.graph), nx.complete_bipartite_graph(2, 3))
    c4 = build_blowup(cycle_base(4), [1, 1, 1, 1])
    assert nx.is_isomorphic(as_nx(c4.graph), nx.cycle_graph(4))
    assert all(w == 0 for w in c4.graph.weights)
    with pytest.raises(ContractError):
        build_blowup(path_base(2), [1, 0])
    with pytest.raises(ContractError):
        build_blowup(path_base(3), [1, 1])
    with pytest.raises(ContractError):
        BaseGraph(3, ((0, 1),))


def test_attach_examples():
    core = build_blowup(path_base(3), [1, 1, 1])
    p4 = attach_trees(core, [([(0, 1)], 0, 2)])
    assert nx.is_isomorphic(as_nx(p4.graph), nx.path_graph(4))
    assert p4.classes == core.classes
    same = attach_trees(core, [([], 0, v) for v in range(3)])
    assert same.graph.edges() == core.graph.edges()
    with pytest.raises(ContractError):
        attach_trees(core, [([(0, 1)], 0, 5)])
    with pytest.raises(ContractError):
        attach_trees(core, [([(0, 1)], 0, 1), ([(0, 1)], 1, 1)])
    with pytest.raises(ContractError):
        attach_trees(core, [([(0, 1), (1, 2), (2, 0)], 0, 1)])


def test_class_neighborhood_examples():
    p3 = build_blowup(path_base(3), [2, 1, 2])
    assert class_neighborhood(p3, 1) == p3.classes[0] | p3.classes[2]
    p2 = build_blowup(path_base(2), [1, 3])
    assert class_neighborhood(p2, 0) == p2.classes[1]
    with pytest.raises(ContractError):
        class_neighborhood(p2, 2)


def test_class_neighborhood_agrees_with_graph():
    for seed in range(100):
        pg = fam.random_bt_tree(GeneratorConfig(seed=seed, max_n=14))
        for i, c in enumerate(pg.classes):
            assert class_neighborhood(pg, i) == neighborhood(pg.graph, c) & pg.core


def test_quotient_recovers_base():
    for seed in range(50):
        pg = fam.random_bt_tree(GeneratorConfig(seed=seed, max_n=14, attach_prob=0.0))
        live, qedges = quotient_edges(pg, pg.core)
        assert live == list(range(len(pg.classes)))
        assert qedges == {tuple(sorted(e)) for e in pg.base.edges}


def test_remainder_shape():
    c6 = build_blowup(cycle_base(3), [2, 2, 2])
    assert remainder_shape(c6, c6.graph.full) == "cycle"
    assert remainder_shape(c6, c6.graph.full & ~c6.classes[0]) == "path"
    assert remainder_shape(c6, 1) == "path"
    assert remainder_shape(c6, c6.classes[0]) is None


def test_bt_tree_degenerate_and_determinism():
    cfg = GeneratorConfig(seed=4, min_n=2, max_n=2, min_k=2, max_k=2, max_class=1, attach_prob=0.0)
    pg = fam.random_bt_tree(cfg)
    assert pg.graph.edges() == [(0, 1)]
    a = fam.random_bt_tree(GeneratorConfig(seed=7))
    b = fam.random_bt_tree(GeneratorConfig(seed=7))
    assert a == b and a.graph.weights == b.graph.weights


def test_unsatisfiable_bounds():
    with pytest.raises(ContractError):
        fam.random_bt_tree(GeneratorConfig(seed=0, min_n=3, max_n=3, parity="even"))
    with pytest.raises(ContractError):
        GeneratorConfig(seed=0, weight_low=-1)


@pytest.mark.parametrize("make", [fam.random_bt_tree, fam.random_kmn_tree, fam.random_blowup_cycle, fam.random_g_tree])
def test_partitioned_generators(make):
    for seed in range(1000):
        parity = ("even", "odd", None)[seed % 3]
        if make is fam.random_blowup_cycle and parity == "odd":
            parity = None
        cfg = GeneratorConfig(seed=seed, max_n=14, parity=parity)
        pg = make(cfg)
        g = pg.graph
        assert 1 <= g.n <= 14 and is_connected(g)
        if parity:
            assert g.n % 2 == (parity == "odd")
        if seed % 20 == 0:
            blowup_invariants(pg)
        if make is not fam.random_g_tree and make is not fam.random_blowup_cycle:
            assert two_coloring(g) is not None
        if make is fam.random_blowup_cycle:
            assert (two_coloring(g) is not None) == (pg.base.k % 2 == 0)


def test_kmn_classes():
    pg = fam.random_kmn_tree(GeneratorConfig(seed=3), m=2, n=3, attach=False)
    assert sorted(bin(c).count("1") for c in pg.classes) == [2, 3]
    assert pg.n == 5 and len(pg.graph.edges()) == 6


def test_even_bipartite():
    p2 = fam.random_even_bipartite(GeneratorConfig(seed=1, min_n=2, max_n=2))
    assert p2.edges() == [(0, 1)]
    for seed in range(1000):
        g = fam.random_even_bipartite(GeneratorConfig(seed=seed, max_n=12))
        assert g.n % 2 == 0 and is_connected(g) and two_coloring(g) is not None


def test_trees_and_paths():
    for seed in range(200):
        t = fam.random_tree(GeneratorConfig(seed=seed, max_n=12))
        assert nx.is_tree(as_nx(t))
        p = fam.random_path(GeneratorConfig(seed=seed, max_n=12))
        assert nx.is_isomorphic(as_nx(p), nx.path_graph(p.n))


def test_split_instances():
    for seed in range(300):
        g, part_1 = fam.random_split_instance(GeneratorConfig(seed=seed, max_n=12, parity="even"))
        part_2 = g.full & ~part_1
        u1, u2 = fam.boundary(g, part_1), fam.boundary(g, part_2)
        assert g.n % 2 == 0 and is_connected(g)
        assert roots_cover(g, part_1, u1) and roots_cover(g, part_2, u2)
        for a in members(u1):
            assert g.nbr[a] & part_2 == u2


def test_weights_in_range():
    cfg = GeneratorConfig(seed=9, weight_low=5, weight_high=8, max_n=10)
    g = fam.random_connected(cfg)
    assert all(5 <= w <= 8 for w in g.weights)
    z = fam.random_tree(GeneratorConfig(seed=9, zero_prob=1.0))
    assert all(w == 0 for w in z.weights)


def test_mask_helpers():
    assert mask_of([0, 3]) == 9 and members(9) == [0, 3]
