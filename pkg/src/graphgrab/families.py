"""Constructors and seeded random generators for the graph classes studied.

Blow-ups replace each base vertex ``i`` by an independent class ``V_i`` and
completely join classes whose base vertices are adjacent. ``attach_trees``
then hangs a private tree off chosen core vertices, giving G-trees, B(T)-trees
and K_{m,n}-trees. Class indices are 0-based throughout.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from typing import Sequence

import networkx as nx

from .graph import ContractError, WeightedGraph, is_connected, mask_of, members, neighborhood, popcount


@dataclass(frozen=True)
class BaseGraph:
    k: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ContractError("base graph needs at least one vertex")
        if not is_connected(WeightedGraph.from_edges(self.k, self.edges)):
            raise ContractError("base graph must be connected")

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in {(min(a, b), max(a, b)) for a, b in self.edges}

    def neighbors(self, i: int) -> list[int]:
        return sorted({b for a, b in self.edges if a == i} | {a for a, b in self.edges if b == i})


def path_base(k: int) -> BaseGraph:
    return BaseGraph(k, tuple((i, i + 1) for i in range(k - 1)))


def cycle_base(k: int) -> BaseGraph:
    if k < 3:
        raise ContractError("a cycle needs at least three vertices")
    return BaseGraph(k, tuple((i, (i + 1) % k) for i in range(k)))


@dataclass(frozen=True)
class PartitionedGraph:
    """A blow-up core (optionally with attached trees) and its class structure.

    ``classes[i]`` is the vertex mask of ``V_i``; ``core`` is the union of the
    classes. Vertices outside ``core`` belong to attached trees.
    """

    graph: WeightedGraph
    classes: tuple[int, ...]
    base: BaseGraph
    family: str = "blowup"
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def core(self) -> int:
        out = 0
        for c in self.classes:
            out |= c
        return out

    @property
    def n(self) -> int:
        return self.graph.n

    def class_of(self, v: int) -> int | None:
        for i, c in enumerate(self.classes):
            if c >> v & 1:
                return i
        return None

    def with_weights(self, weights: Sequence) -> "PartitionedGraph":
        return replace(self, graph=self.graph.with_weights(weights))


def build_blowup(base: BaseGraph, sizes: Sequence[int]) -> PartitionedGraph:
    if len(sizes) != base.k:
        raise ContractError(f"{len(sizes)} class sizes for a base on {base.k} vertices")
    if any(s < 1 for s in sizes):
        raise ContractError("every class of a blow-up must be nonempty")
    classes = []
    start = 0
    for s in sizes:
        classes.append(mask_of(range(start, start + s)))
        start += s
    edges = []
    for i, j in base.edges:
        edges.extend(itertools.product(members(classes[i]), members(classes[j])))
    g = WeightedGraph.from_edges(start, edges)
    return PartitionedGraph(g, tuple(classes), base)


def attach_trees(core: PartitionedGraph, trees: Sequence[tuple[nx.Graph | Sequence[tuple[int, int]], int, int]]) -> PartitionedGraph:
    """Glue trees onto core vertices.

    Each entry is ``(tree, tree_root, core_vertex)``: ``tree`` is a networkx
    tree (or its edge list) on ``0..t-1`` and ``tree_root`` is identified with
    ``core_vertex``. New vertices are numbered after the existing ones.
    """
    g = core.graph
    used = set()
    edges = list(g.edges())
    n = g.n
    for tree, tree_root, at in trees:
        if not core.core >> at & 1:
            raise ContractError(f"attach vertex {at} is not in the blow-up core")
        if at in used:
            raise ContractError(f"core vertex {at} already carries a tree")
        used.add(at)
        t = tree if isinstance(tree, nx.Graph) else nx.Graph(list(tree))
        if t.number_of_nodes() == 0:
            t.add_node(0)
        if not nx.is_tree(t):
            raise ContractError("attached graph is not a tree")
        if tree_root not in t:
            raise ContractError(f"tree root {tree_root} not in tree")
        ids = {}
        for u in sorted(t.nodes):
            if u == tree_root:
                ids[u] = at
            else:
                ids[u] = n
                n += 1
        edges.extend((ids[a], ids[b]) for a, b in t.edges)
    weights = list(g.weights) + [0] * (n - g.n)
    return replace(core, graph=WeightedGraph.from_edges(n, edges, weights), family="g-tree")


def class_neighborhood(pg: PartitionedGraph, i: int) -> int:
    """Mask of N_H(V_i): the classes joined to ``V_i`` in the blow-up core."""
    if not 0 <= i < len(pg.classes):
        raise ContractError(f"class index {i} out of range [0, {len(pg.classes)})")
    out = 0
    for j in pg.base.neighbors(i):
        out |= pg.classes[j]
    return out


def quotient_edges(pg: PartitionedGraph, remaining: int) -> tuple[list[int], set[tuple[int, int]]] | None:
    """Nonempty class indices within ``remaining`` and their quotient edges.

    Returns ``None`` if ``remaining`` leaves the core, or if the induced
    subgraph is not a blow-up of its quotient (an edge inside a class or a
    partial join between two classes).
    """
    if remaining & ~pg.core:
        return None
    g = pg.graph
    live = [i for i, c in enumerate(pg.classes) if c & remaining]
    qedges = set()
    for a, b in itertools.combinations(live, 2):
        ca, cb = pg.classes[a] & remaining, pg.classes[b] & remaining
        links = sum(popcount(g.nbr[v] & cb) for v in members(ca))
        if links == popcount(ca) * popcount(cb):
            qedges.add((a, b))
        elif links:
            return None
    for i in live:
        ci = pg.classes[i] & remaining
        if any(g.nbr[v] & ci for v in members(ci)):
            return None
    return live, qedges


def remainder_shape(pg: PartitionedGraph, remaining: int) -> str | None:
    """``"path"`` or ``"cycle"`` if ``remaining`` induces a blow-up of one, else ``None``.

    A single class of size one counts as a blow-up of a one-vertex path.
    """
    q = quotient_edges(pg, remaining)
    if q is None:
        return None
    live, qedges = q
    if not live:
        return None
    h = nx.Graph()
    h.add_nodes_from(live)
    h.add_edges_from(qedges)
    if not nx.is_connected(h):
        return None
    degrees = [d for _, d in h.degree]
    if len(live) >= 3 and all(d == 2 for d in degrees) and h.number_of_edges() == len(live):
        return "cycle"
    if len(live) == 1:
        return "path" if popcount(remaining) == 1 else None
    if nx.is_tree(h) and max(degrees) <= 2:
        return "path"
    return None


@dataclass(frozen=True)
class GeneratorConfig:
    """Bounds for the random generators; every generator is a pure function of it."""

    seed: int = 0
    min_n: int = 1
    max_n: int = 14
    min_k: int = 1
    max_k: int = 5
    min_class: int = 1
    max_class: int = 3
    attach_prob: float = 0.5
    max_attach: int = 3
    weight_low: int = 0
    weight_high: int = 100
    zero_prob: float = 0.0
    parity: str | None = None
    edge_prob: float = 0.5
    max_attempts: int = 10_000

    def __post_init__(self):
        if self.parity not in (None, "even", "odd"):
            raise ContractError(f"parity must be 'even', 'odd' or None, not {self.parity!r}")
        if self.weight_low < 0 or self.weight_high < self.weight_low:
            raise ContractError("weight range must satisfy 0 <= low <= high")
        if self.min_n > self.max_n or self.min_k > self.max_k or self.min_class > self.max_class:
            raise ContractError("empty size bounds")
        if self.min_class < 1 or self.min_k < 1:
            raise ContractError("class sizes and base sizes start at 1")

    def rng(self) -> random.Random:
        return random.Random(self.seed)

    def accepts(self, n: int) -> bool:
        if not self.min_n <= n <= self.max_n:
            return False
        if self.parity == "even":
            return n % 2 == 0
        if self.parity == "odd":
            return n % 2 == 1
        return True


def random_weights(cfg: GeneratorConfig, rng: random.Random, n: int) -> list[int]:
    return [0 if rng.random() < cfg.zero_prob else rng.randint(cfg.weight_low, cfg.weight_high) for _ in range(n)]


def random_tree_edges(rng: random.Random, k: int) -> list[tuple[int, int]]:
    """Edges of a uniformly random labelled tree on ``0..k-1`` via a Prufer sequence."""
    if k <= 1:
        return []
    if k == 2:
        return [(0, 1)]
    seq = [rng.randrange(k) for _ in range(k - 2)]
    return sorted(tuple(sorted(e)) for e in nx.from_prufer_sequence(seq).edges)


def _sample(cfg: GeneratorConfig, draw):
    rng = cfg.rng()
    for _ in range(cfg.max_attempts):
        out = draw(rng)
        if out is not None and cfg.accepts(out.n):
            return out, rng
    raise ContractError(f"no instance within bounds after {cfg.max_attempts} attempts: {cfg}")


def _draw_attachments(cfg: GeneratorConfig, rng: random.Random, core: PartitionedGraph) -> PartitionedGraph:
    trees = []
    for v in members(core.core):
        if cfg.max_attach > 0 and rng.random() < cfg.attach_prob:
            extra = rng.randint(1, cfg.max_attach)
            trees.append((random_tree_edges(rng, extra + 1), rng.randrange(extra + 1), v))
    if not trees:
        return core
    return attach_trees(core, trees)


def _finish(pg: PartitionedGraph, cfg: GeneratorConfig, rng: random.Random, family: str) -> PartitionedGraph:
    pg = pg.with_weights(random_weights(cfg, rng, pg.n))
    meta = {"family": family, "seed": cfg.seed, "parity": "even" if pg.n % 2 == 0 else "odd"}
    return replace(pg, family=family, meta=meta)


def _blowup_sizes(cfg: GeneratorConfig, rng: random.Random, k: int) -> list[int]:
    if k == 1:
        return [1]  # a lone class of size >= 2 would be disconnected
    return [rng.randint(cfg.min_class, cfg.max_class) for _ in range(k)]


def random_bt_tree(cfg: GeneratorConfig, attach: bool = True) -> PartitionedGraph:
    """Random B(T)-tree: blow-up of a Prufer tree with optional attached trees."""

    def draw(rng):
        k = rng.randint(cfg.min_k, cfg.max_k)
        core = build_blowup(BaseGraph(k, tuple(random_tree_edges(rng, k))), _blowup_sizes(cfg, rng, k))
        if core.n > cfg.max_n:
            return None
        return _draw_attachments(cfg, rng, core) if attach else core

    pg, rng = _sample(cfg, draw)
    return _finish(pg, cfg, rng, "bt-tree" if attach else "blowup")


def random_kmn_tree(cfg: GeneratorConfig, m: int | None = None, n: int | None = None, attach: bool = True) -> PartitionedGraph:
    """Random K_{m,n}-tree; classes[0] and classes[1] are the partite classes."""

    def draw(rng):
        sizes = [m if m is not None else rng.randint(cfg.min_class, cfg.max_class),
                 n if n is not None else rng.randint(cfg.min_class, cfg.max_class)]
        core = build_blowup(path_base(2), sizes)
        return _draw_attachments(cfg, rng, core) if attach else core

    pg, rng = _sample(cfg, draw)
    return _finish(pg, cfg, rng, "kmn-tree")


def random_blowup_cycle(cfg: GeneratorConfig) -> PartitionedGraph:
    """Random blow-up of a cycle C_k with ``k >= max(3, cfg.min_k)``."""

    def draw(rng):
        k = rng.randint(max(3, cfg.min_k), max(3, cfg.max_k))
        if k > cfg.max_n:
            return None
        return build_blowup(cycle_base(k), [rng.randint(cfg.min_class, cfg.max_class) for _ in range(k)])

    pg, rng = _sample(cfg, draw)
    return _finish(pg, cfg, rng, "blowup-cycle")


def random_g_tree(cfg: GeneratorConfig) -> PartitionedGraph:
    """Random G-tree over a random connected base graph (classes of size one)."""

    def draw(rng):
        k = rng.randint(cfg.min_k, cfg.max_k)
        edges = set(random_tree_edges(rng, k))
        edges |= {(a, b) for a, b in itertools.combinations(range(k), 2) if rng.random() < cfg.edge_prob}
        core = build_blowup(BaseGraph(k, tuple(sorted(edges))), [1] * k)
        return _draw_attachments(cfg, rng, core)

    pg, rng = _sample(cfg, draw)
    return _finish(pg, cfg, rng, "g-tree")


def random_tree(cfg: GeneratorConfig) -> WeightedGraph:
    def draw(rng):
        n = rng.randint(cfg.min_n, cfg.max_n)
        return WeightedGraph.from_edges(n, random_tree_edges(rng, n))

    g, rng = _sample(cfg, draw)
    return g.with_weights(random_weights(cfg, rng, g.n))


def random_path(cfg: GeneratorConfig) -> WeightedGraph:
    def draw(rng):
        n = rng.randint(cfg.min_n, cfg.max_n)
        return WeightedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    g, rng = _sample(cfg, draw)
    return g.with_weights(random_weights(cfg, rng, g.n))


def random_connected(cfg: GeneratorConfig) -> WeightedGraph:
    """Random connected graph: random tree plus each other edge with a random density."""

    def draw(rng):
        n = rng.randint(cfg.min_n, cfg.max_n)
        p = rng.random() * cfg.edge_prob
        edges = set(random_tree_edges(rng, n))
        edges |= {(a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p}
        return WeightedGraph.from_edges(n, sorted(edges))

    g, rng = _sample(cfg, draw)
    return g.with_weights(random_weights(cfg, rng, g.n))


def random_even_bipartite(cfg: GeneratorConfig) -> WeightedGraph:
    """Random connected bipartite graph with an even number of vertices."""
    rng = cfg.rng()
    evens = [n for n in range(max(2, cfg.min_n), cfg.max_n + 1) if n % 2 == 0]
    if not evens:
        raise ContractError(f"no even vertex count in [{cfg.min_n}, {cfg.max_n}]")
    n = rng.choice(evens)
    side_a = rng.randint(1, n - 1)
    color = [0] * side_a + [1] * (n - side_a)
    placed = [0, side_a]
    edges = {(0, side_a)}
    order = [v for v in range(n) if v not in placed]
    rng.shuffle(order)
    for v in order:
        other = [u for u in placed if color[u] != color[v]]
        edges.add(tuple(sorted((v, rng.choice(other)))))
        placed.append(v)
    p = rng.random() * cfg.edge_prob
    for a in range(side_a):
        for b in range(side_a, n):
            if rng.random() < p:
                edges.add((a, b))
    perm = list(range(n))
    rng.shuffle(perm)
    g = WeightedGraph.from_edges(n, sorted(edges)).relabel(perm)
    return g.with_weights(random_weights(cfg, rng, n))


def _random_rooted_part(rng: random.Random, vertices: list[int], edge_prob: float) -> tuple[list[tuple[int, int]], int]:
    """Random graph on ``vertices`` (possibly disconnected) and a root mask meeting every component."""
    c = rng.randint(1, min(3, len(vertices)))
    shuffled = vertices[:]
    rng.shuffle(shuffled)
    cuts = sorted(rng.sample(range(1, len(vertices)), c - 1)) if c > 1 else []
    groups = [shuffled[i:j] for i, j in zip([0] + cuts, cuts + [len(vertices)])]
    edges = []
    root = 0
    for grp in groups:
        edges += [(grp[a], grp[b]) for a, b in random_tree_edges(rng, len(grp))]
        edges += [(a, b) for a, b in itertools.combinations(grp, 2) if rng.random() < edge_prob]
        root |= 1 << rng.choice(grp)
        for v in grp:
            if rng.random() < 0.3:
                root |= 1 << v
    return edges, root


def random_split_instance(cfg: GeneratorConfig) -> tuple[WeightedGraph, int]:
    """Graph G with a vertex split (G_1, G_2) whose boundary sets are completely joined.

    Returns ``(g, part_1)``. The only edges between the parts form a complete
    join between a root set of G_1 and a root set of G_2.
    """
    rng = cfg.rng()
    sizes = [n for n in range(max(2, cfg.min_n), cfg.max_n + 1) if cfg.accepts(n)]
    if not sizes:
        raise ContractError(f"no admissible vertex count in [{cfg.min_n}, {cfg.max_n}]")
    n = rng.choice(sizes)
    n1 = rng.randint(1, n - 1)
    p = rng.random() * cfg.edge_prob
    e1, u1 = _random_rooted_part(rng, list(range(n1)), p)
    e2, u2 = _random_rooted_part(rng, list(range(n1, n)), p)
    edges = set(tuple(sorted(e)) for e in e1 + e2)
    edges |= set(itertools.product(members(u1), members(u2)))
    perm = list(range(n))
    rng.shuffle(perm)
    g = WeightedGraph.from_edges(n, sorted(edges)).relabel(perm)
    part_1 = mask_of(perm[v] for v in range(n1))
    return g.with_weights(random_weights(cfg, rng, n)), part_1


def boundary(g: WeightedGraph, part: int) -> int:
    """Vertices of ``part`` with a neighbour outside it."""
    return part & neighborhood(g, g.full & ~part)
