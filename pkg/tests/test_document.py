from fractions import Fraction

import networkx as nx
import pytest

from graphgrab import families as fam
from graphgrab.document import GraphDocument, to_dot
from graphgrab.enumeration import connected_bipartite_graphs
from graphgrab.graph import ContractError, WeightedGraph


def test_roundtrip_generated_documents():
    for seed in range(100):
        cfg = fam.GeneratorConfig(seed=seed, max_n=12)
        pg = fam.random_bt_tree(cfg)
        doc = GraphDocument.from_partitioned(pg, root=0b1, seed=seed)
        again = GraphDocument.loads(doc.dumps())
        assert again == doc and again.dumps() == doc.dumps()


def test_exact_weight_strings(tmp_path):
    g = WeightedGraph.from_edges(2, [(0, 1)], ["0.1", "7/3"])
    doc = GraphDocument(g)
    assert '"weights": ["1/10", "7/3"]' in doc.dumps()
    doc.save(tmp_path / "g.json")
    assert GraphDocument.load(tmp_path / "g.json").graph.weights == (Fraction(1, 10), Fraction(7, 3))


@pytest.mark.parametrize("text", [
    "not json",
    '{"format": 2, "n": 1, "weights": ["1"], "edges": []}',
    '{"format": 1, "n": 2, "weights": ["1", "2"], "edges": [[0, 5]]}',
    '{"format": 1, "n": 2, "weights": ["1", "-2"], "edges": [[0, 1]]}',
    '{"format": 1, "n": 2, "weights": ["1", "2"], "edges": [[0, 1]], "root": [4]}',
    '{"format": 1, "n": 2, "weights": ["1"], "edges": [[0, 1]]}',
])
def test_malformed_documents(text):
    with pytest.raises(ContractError):
        GraphDocument.loads(text)


def test_dot_export():
    p2 = GraphDocument(WeightedGraph.from_edges(2, [(0, 1)], [3, 5]))
    dot = to_dot(p2)
    assert dot.count("label=") == 2 and dot.count(" -- ") == 1
    assert "cluster" not in dot
    pg = fam.build_blowup(fam.path_base(3), [2, 1, 2])
    dot = to_dot(GraphDocument.from_partitioned(pg, root=pg.classes[1]))
    assert dot.count("subgraph cluster_") == 3
    assert "doublecircle" in dot
    assert dot == to_dot(GraphDocument.from_partitioned(pg, root=pg.classes[1]))


def test_enumeration_counts():
    # connected bipartite graphs up to isomorphism
    assert [len(connected_bipartite_graphs(n)) for n in range(1, 9)] == [1, 1, 1, 3, 5, 17, 44, 182]


def test_enumeration_matches_atlas():
    atlas = nx.graph_atlas_g()
    for n in range(1, 8):
        expected = sum(1 for h in atlas if h.number_of_nodes() == n and nx.is_connected(h) and nx.is_bipartite(h))
        got = connected_bipartite_graphs(n)
        assert len(got) == expected
        graphs = []
        for edges in got:
            h = nx.Graph(list(edges))
            h.add_nodes_from(range(n))
            assert nx.is_connected(h) and nx.is_bipartite(h)
            assert not any(nx.is_isomorphic(h, other) for other in graphs)
            graphs.append(h)
