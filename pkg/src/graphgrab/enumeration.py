"""Connected bipartite graphs up to isomorphism, for small vertex counts.

Every connected graph has a non-cut vertex, so each connected bipartite graph
on ``n`` vertices extends one on ``n - 1`` by a vertex joined to a nonempty
subset of one colour class. Candidates are bucketed by a Weisfeiler-Lehman
hash and kept only if not isomorphic to a graph already in their bucket.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx

from .graph import WeightedGraph


def _subsets(items):
    for r in range(1, len(items) + 1):
        yield from itertools.combinations(items, r)


@lru_cache(maxsize=None)
def connected_bipartite_graphs(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Edge lists of all connected bipartite graphs on ``n`` vertices, one per isomorphism class."""
    if n <= 0:
        return ()
    if n == 1:
        return ((),)
    buckets: dict[str, list[nx.Graph]] = {}
    out = []
    for edges in connected_bipartite_graphs(n - 1):
        h = nx.Graph(list(edges))
        h.add_nodes_from(range(n - 1))
        side = nx.bipartite.color(h)
        for color in (0, 1):
            cls = [v for v in range(n - 1) if side[v] == color]
            for nbrs in _subsets(cls):
                cand = h.copy()
                cand.add_edges_from((v, n - 1) for v in nbrs)
                key = nx.weisfeiler_lehman_graph_hash(cand, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(cand, other) for other in bucket):
                    continue
                bucket.append(cand)
                out.append(tuple(sorted(tuple(sorted(e)) for e in cand.edges)))
    return tuple(out)


def weighted(n: int, edges, weights) -> WeightedGraph:
    return WeightedGraph.from_edges(n, edges, weights)
