"""Exact per-claim checkers and the seeded corpora that drive them.

Each checker compares game values with exact rational arithmetic and returns
:class:`ClaimReport` records. A failing report carries a witness: the graph
document (with the root set when there is one) and the values that broke the
inequality, which is enough to reproduce the failure alone.

Inequalities are checked in both forms related by weight conservation, e.g.
``R(G,Y,-2) <= N(G,-2)`` together with ``R(G,Y,-1) >= N(G,-1)``; a
disagreement between the two forms raises ``AssertionError`` since it can only
mean a broken solver.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

import networkx as nx

from .document import GraphDocument
from .engine import NORMAL, GameMode, SolvedGame, best_response_value, solve
from .enumeration import connected_bipartite_graphs
from .families import (
    GeneratorConfig,
    PartitionedGraph,
    class_neighborhood,
    random_blowup_cycle,
    random_bt_tree,
    random_connected,
    random_even_bipartite,
    random_kmn_tree,
    random_path,
    random_split_instance,
    remainder_shape,
)
from .graph import (
    ContractError,
    WeightedGraph,
    feasible_moves_normal,
    feasible_moves_rooted,
    induced,
    is_connected,
    mask_of,
    members,
    neighborhood,
)
from .strategies import InvariantBreach, MaxFirstStrategy, SubgameAssignment, composite_strategy


@dataclass
class ClaimReport:
    claim: str
    instance: str
    passed: bool
    witness: dict | None = None
    detail: str = ""

    def to_record(self) -> dict:
        rec = {"claim": self.claim, "instance": self.instance, "verdict": "pass" if self.passed else "fail"}
        if self.detail:
            rec["detail"] = self.detail
        if self.witness is not None:
            rec["witness"] = self.witness
        return rec


def _witness(g: WeightedGraph, root: int | None, values: dict, violated: str, classes=None, meta=None) -> dict:
    doc = GraphDocument(g, classes, root, dict(meta or {}))
    return {"document": doc.to_dict(), "values": {k: str(v) for k, v in values.items()}, "violated": violated}


class Scores:
    """Solved games of one graph, cached by root mask (``None`` for the normal game)."""

    def __init__(self, g: WeightedGraph):
        self.g = g
        self._cache: dict[int | None, SolvedGame] = {}

    def game(self, root: int | None = None) -> SolvedGame:
        if root not in self._cache:
            self._cache[root] = solve(self.g, NORMAL if root is None else GameMode.rooted(root))
        return self._cache[root]

    def N(self, k: int) -> Fraction:
        return self.game().score(k)

    def R(self, root: int, k: int) -> Fraction:
        return self.game(root).score(k)


def _check_pair(first: bool, second: bool, what: str) -> bool:
    if first != second:
        raise AssertionError(f"equivalent forms disagree for {what}: weight conservation broken")
    return first


def _minus(g: WeightedGraph, x: int, root: int | None) -> SolvedGame:
    """Solved game on ``g - x``, rooted at ``root - x`` if a root is given."""
    sub, old = induced(g, g.full & ~(1 << x))
    if root is None:
        return solve(sub)
    return solve(sub, GameMode.rooted(mask_of(i for i, v in enumerate(old) if root >> v & 1)))


# ---------------------------------------------------------------- observations


def check_observations(g: WeightedGraph, roots_to_try: Iterable[int] = (), label: str = "") -> list[ClaimReport]:
    """Observations on single moves, for every feasible and every optimal move.

    OBS-2.1: N(G,2) <= N(G-x,1) for feasible x, with equality for optimal x.
    OBS-2.2: the same for the game rooted at each set in ``roots_to_try``.
    OBS-2.3: R(G,v,-2) = R(G-v,N_G(v),-1) for every vertex v (vacuous for n = 1).
    """
    if not g.n or not is_connected(g):
        raise ContractError("observations are checked on nonempty connected graphs")
    sc = Scores(g)
    roots = list(roots_to_try)
    reports = [_obs_report("OBS-2.1", g, _single_move_failure(g, sc, None), label)]
    fail = None
    for root in roots:
        fail = fail or _single_move_failure(g, sc, root)
    if roots:
        reports.append(_obs_report("OBS-2.2", g, fail, f"{label} roots={len(roots)}"))

    fail = None
    if g.n > 1:
        for v in range(g.n):
            lhs = sc.R(1 << v, -2)
            sub = _minus(g, v, neighborhood(g, 1 << v))
            rhs = sub.score(-1)
            ok = _check_pair(lhs == rhs, sc.R(1 << v, -1) == sub.score(-2) + g.weights[v], f"OBS-2.3 at v={v}")
            if not ok and fail is None:
                fail = (1 << v, None, {"R(G,v,-2)": lhs, "R(G-v,N(v),-1)": rhs}, "R(G,v,-2) == R(G-v,N_G(v),-1)")
    report = _obs_report("OBS-2.3", g, fail, label)
    if g.n == 1:
        report.detail = "vacuous: no vertices remain after the root"
    reports.append(report)
    return reports


def _single_move_failure(g: WeightedGraph, sc: Scores, root: int | None):
    """First feasible move breaking the single-move observation, or ``None``."""
    game = sc.game(root)
    name = "N" if root is None else "R"
    feasible = feasible_moves_normal(g, g.full) if root is None else feasible_moves_rooted(g, g.full, root)
    opt = game.optimal_moves()
    s1, s2 = game.score(1), game.score(2)
    for x in members(feasible):
        after = _minus(g, x, root)
        a1, a2 = after.score(1), after.score(2)
        rel = "<="
        ok = _check_pair(s2 <= a1, s1 >= a2 + g.weights[x], f"{name} at x={x}")
        if ok and opt >> x & 1:
            rel = "=="
            ok = _check_pair(s2 == a1, s1 == a2 + g.weights[x], f"{name} equality at x={x}")
        if not ok:
            return root, x, {f"{name}(G,2)": s2, f"{name}(G-x,1)": a1}, f"{name}(G,2) {rel} {name}(G-x,1)"
    return None


def _obs_report(claim: str, g: WeightedGraph, fail, label: str) -> ClaimReport:
    if fail is None:
        return ClaimReport(claim, label, True)
    root, x, values, violated = fail
    return ClaimReport(claim, label, False, _witness(g, root, values, violated), f"move {x}" if x is not None else "")


# ---------------------------------------------------------------- lemmas


def check_lemma_kmn(pg: PartitionedGraph, label: str = "") -> ClaimReport:
    """R(G,Y,-2) <= N(G,-2) on a K_{m,n}-tree, for both partite classes as Y."""
    if len(pg.classes) != 2 or len(pg.base.edges) != 1:
        raise ContractError("expected a K_{m,n}-tree with two partite classes")
    g = pg.graph
    sc = Scores(g)
    for y in pg.classes:
        ok = _check_pair(sc.R(y, -2) <= sc.N(-2), sc.R(y, -1) >= sc.N(-1), "LEM-2.4")
        if not ok:
            vals = {"R(G,Y,-2)": sc.R(y, -2), "N(G,-2)": sc.N(-2)}
            return ClaimReport("LEM-2.4", label, False, _witness(g, y, vals, "R(G,Y,-2) <= N(G,-2)", list(pg.classes)))
    return ClaimReport("LEM-2.4", label, True)


def check_lemma_gameB(g: WeightedGraph, assign: SubgameAssignment, label: str = "", with_strategy: bool = True) -> list[ClaimReport]:
    """Two-subgame inequalities, and the composite strategy's realised guarantee.

    LEM-3.1.1: R(G,U1,1) >= R(G1,U1,-2) + R(G2,U2,-1)
    LEM-3.1.2: R(G,U1,1) >= R(G,U2,2)
    LEM-3.1-composite: best response against the composite strategy >= the
    right-hand side of LEM-3.1.1, with no invariant breach on any line.
    """
    if g.n % 2:
        raise ContractError("the two-subgame lemma needs an even graph")
    assign.validate(g)
    u1, u2 = assign.root_1, assign.root_2
    sc = Scores(g)
    g1, old1 = induced(g, assign.part_1)
    g2, old2 = induced(g, assign.part_2)
    r1 = solve(g1, GameMode.rooted(mask_of(i for i, v in enumerate(old1) if u1 >> v & 1)))
    r2 = solve(g2, GameMode.rooted(mask_of(i for i, v in enumerate(old2) if u2 >> v & 1)))
    lhs = sc.R(u1, 1)
    rhs = r1.score(-2) + r2.score(-1)
    vals = {"R(G,U1,1)": lhs, "R(G1,U1,-2)": r1.score(-2), "R(G2,U2,-1)": r2.score(-1), "R(G,U2,2)": sc.R(u2, 2)}
    meta = {"part_1": members(assign.part_1)}
    reports = []
    ok = _check_pair(lhs >= rhs, sc.R(u1, 2) <= g.weight() - rhs, "LEM-3.1.1")
    reports.append(ClaimReport("LEM-3.1.1", label, ok, None if ok else _witness(g, u1, vals, "R(G,U1,1) >= R(G1,U1,-2)+R(G2,U2,-1)", meta=meta)))
    ok = _check_pair(lhs >= sc.R(u2, 2), sc.R(u1, 2) <= sc.R(u2, 1), "LEM-3.1.2")
    reports.append(ClaimReport("LEM-3.1.2", label, ok, None if ok else _witness(g, u1, vals, "R(G,U1,1) >= R(G,U2,2)", meta=meta)))
    if with_strategy:
        try:
            strat = composite_strategy(g, assign)
            got = best_response_value(g, GameMode.rooted(u1), strat, "first", feasible=sc.game(u1).feasible_moves)
        except InvariantBreach as exc:
            reports.append(ClaimReport("LEM-3.1-composite", label, False, _witness(g, u1, vals, str(exc), meta=meta), "invariant breach"))
        else:
            ok = got >= rhs
            vals["composite guarantee"] = got
            reports.append(ClaimReport("LEM-3.1-composite", label, ok,
                                       None if ok else _witness(g, u1, vals, "composite guarantee >= R(G1,U1,-2)+R(G2,U2,-1)", meta=meta),
                                       f"turns={strat.turns}"))
    return reports


def _lemma_roots(pg: PartitionedGraph) -> list[tuple[str, str, int]]:
    out = [("1", f"v={v}", 1 << v) for v in range(pg.n)]
    out += [("2", f"V_{i}", c) for i, c in enumerate(pg.classes)]
    for i in range(len(pg.classes)):
        nh = class_neighborhood(pg, i)
        if nh:  # a one-class core has N_H(V_i) empty, which is not a root set
            out.append(("3", f"N_H(V_{i})", nh))
    return out


def check_lemma1(pg: PartitionedGraph, label: str = "", scores: Scores | None = None) -> list[ClaimReport]:
    """R(G,S,-2) <= N(G,-2) for S = {v}, V_i and N_H(V_i) on an H-tree of any parity."""
    g = pg.graph
    sc = scores or Scores(g)
    fails: dict[str, tuple] = {}
    for sub, what, root in _lemma_roots(pg):
        ok = _check_pair(sc.R(root, -2) <= sc.N(-2), sc.R(root, -1) >= sc.N(-1), f"LEM-3.2.{sub} {what}")
        if not ok and sub not in fails:
            fails[sub] = (root, what, {"R(G,S,-2)": sc.R(root, -2), "N(G,-2)": sc.N(-2)})
    return _lemma_reports("LEM-3.2", fails, g, pg, label, "R(G,S,-2) <= N(G,-2)")


def check_lemma2(pg: PartitionedGraph, label: str = "", scores: Scores | None = None) -> list[ClaimReport]:
    """R(G,S,1) >= N(G,2) for S = {v}, V_i and N_H(V_i) on an even H-tree."""
    g = pg.graph
    if g.n % 2:
        raise ContractError("this lemma is stated for even H-trees only")
    sc = scores or Scores(g)
    fails: dict[str, tuple] = {}
    for sub, what, root in _lemma_roots(pg):
        ok = _check_pair(sc.R(root, 1) >= sc.N(2), sc.R(root, 2) <= sc.N(1), f"LEM-3.3.{sub} {what}")
        if not ok and sub not in fails:
            fails[sub] = (root, what, {"R(G,S,1)": sc.R(root, 1), "N(G,2)": sc.N(2)})
    return _lemma_reports("LEM-3.3", fails, g, pg, label, "R(G,S,1) >= N(G,2)")


def _lemma_reports(prefix, fails, g, pg, label, violated) -> list[ClaimReport]:
    out = []
    for sub in ("1", "2", "3"):
        if sub in fails:
            root, what, vals = fails[sub]
            out.append(ClaimReport(f"{prefix}.{sub}", label, False, _witness(g, root, vals, violated, list(pg.classes), pg.meta), what))
        else:
            out.append(ClaimReport(f"{prefix}.{sub}", label, True))
    return out


# ---------------------------------------------------------------- theorem, corollary


def _require_even(g: WeightedGraph, what: str) -> None:
    if g.n % 2:
        raise ContractError(f"{what} is stated for even graphs only")


def check_theorem(pg: PartitionedGraph, label: str = "") -> list[ClaimReport]:
    """2 N(G,1) >= w(G), and the chain N(G,2) <= R(G,v,2) <= N(G,1) for every v."""
    g = pg.graph
    _require_even(g, "the main theorem")
    sc = Scores(g)
    w = g.weight()
    n1, n2 = sc.N(1), sc.N(2)
    meta = pg.meta
    out = [ClaimReport("THM-1.2", label, 2 * n1 >= w,
                       None if 2 * n1 >= w else _witness(g, None, {"N(G,1)": n1, "w(G)": w}, "2 N(G,1) >= w(G)", list(pg.classes), meta))]
    bad = None
    for v in range(g.n):
        r = sc.R(1 << v, 2)
        if not (n2 <= r <= n1):
            bad = _witness(g, 1 << v, {"N(G,2)": n2, "R(G,v,2)": r, "N(G,1)": n1}, "N(G,2) <= R(G,v,2) <= N(G,1)", list(pg.classes), meta)
            break
    out.append(ClaimReport("THM-1.2-chain", label, bad is None, bad))
    return out


def check_winkler_path(g: WeightedGraph, label: str = "") -> ClaimReport:
    _require_even(g, "the even-path claim")
    n1, w = solve(g).score(1), g.weight()
    ok = 2 * n1 >= w
    return ClaimReport("THM-1.2-path", label, ok, None if ok else _witness(g, None, {"N(G,1)": n1, "w(G)": w}, "2 N(G,1) >= w(G)"))


def check_corollary(pg: PartitionedGraph, label: str = "", with_strategy: bool = False) -> list[ClaimReport]:
    """Even blow-up of a cycle: Alice's value, the structural step, optionally max-first play.

    The structural step is checked for every first move ``a`` and every reply
    ``b``: the remainder must be an even blow-up of a path or a cycle.
    """
    g = pg.graph
    _require_even(g, "the cycle corollary")
    if remainder_shape(pg, g.full) != "cycle":
        raise ContractError("instance is not a blow-up of a cycle")
    game = solve(g)
    w = g.weight()
    n1 = game.score(1)
    classes = list(pg.classes)
    out = [ClaimReport("COR-1.3", label, 2 * n1 >= w,
                       None if 2 * n1 >= w else _witness(g, None, {"N(G,1)": n1, "w(G)": w}, "2 N(G,1) >= w(G)", classes, pg.meta))]
    bad = None
    if feasible_moves_normal(g, g.full) != g.full:
        bad = _witness(g, None, {}, "every vertex of a cycle blow-up is a non-cut vertex", classes, pg.meta)
    for a in members(g.full):
        rest = g.full & ~(1 << a)
        for b in members(feasible_moves_normal(g, rest)) if bad is None else ():
            left = rest & ~(1 << b)
            if remainder_shape(pg, left) is None:
                bad = _witness(g, None, {"a": a, "b": b}, "G-{a,b} is an even blow-up of a path or cycle", classes, pg.meta)
                break
    out.append(ClaimReport("COR-1.3-structure", label, bad is None, bad))
    if with_strategy:
        try:
            strat = MaxFirstStrategy(pg, game)
            got = best_response_value(g, NORMAL, strat, "first", feasible=game.feasible_moves)
        except InvariantBreach as exc:
            out.append(ClaimReport("COR-1.3-maxfirst", label, False, _witness(g, None, {}, str(exc), classes, pg.meta), "invariant breach"))
        else:
            a = strat.choose(g.full, ())
            replies = members(feasible_moves_normal(g, g.full & ~(1 << a)))
            heavier = all(g.weights[a] >= g.weights[b] for b in replies)
            ok = 2 * got >= w and heavier
            out.append(ClaimReport("COR-1.3-maxfirst", label, ok,
                                   None if ok else _witness(g, None, {"guarantee": got, "w(G)": w}, "2 guarantee >= w(G) and w(a) >= w(b)", classes, pg.meta),
                                   f"structure checks={strat.structure_checks}"))
    return out


# ---------------------------------------------------------------- conjecture search


@dataclass
class SearchResult:
    instances: int = 0
    findings: list[ClaimReport] = field(default_factory=list)
    notes: list[ClaimReport] = field(default_factory=list)


def _lemma_style_notes(g: WeightedGraph, sc: Scores, label: str) -> list[ClaimReport]:
    """Single-vertex-root inequalities that hold on B(T)-trees but may fail elsewhere."""
    out = []
    for v in range(g.n):
        if sc.R(1 << v, -2) > sc.N(-2):
            out.append(ClaimReport("NOTE-3.2.1", label, False, _witness(g, 1 << v, {"R(G,v,-2)": sc.R(1 << v, -2), "N(G,-2)": sc.N(-2)}, "R(G,v,-2) <= N(G,-2)")))
            break
    for v in range(g.n):
        if sc.R(1 << v, 1) < sc.N(2):
            out.append(ClaimReport("NOTE-3.3.1", label, False, _witness(g, 1 << v, {"R(G,v,1)": sc.R(1 << v, 1), "N(G,2)": sc.N(2)}, "R(G,v,1) >= N(G,2)")))
            break
    return out


def search_instances(seed: int, max_exhaustive_n: int = 8, zero_one_max_n: int = 6, weightings: int = 3,
                     random_count: int = 10_000, random_max_n: int = 10) -> Iterator[tuple[str, WeightedGraph]]:
    """Connected bipartite even graphs: exhaustive small ones, then random ones."""
    rng = random.Random(seed)
    for n in range(2, max_exhaustive_n + 1, 2):
        for gi, edges in enumerate(connected_bipartite_graphs(n)):
            base = WeightedGraph.from_edges(n, edges)
            if n <= zero_one_max_n:
                for bits in itertools.product((0, 1), repeat=n):
                    yield f"exhaustive n={n} graph={gi} weights={''.join(map(str, bits))}", base.with_weights(bits)
            else:
                for j in range(weightings):
                    ws = [rng.randint(0, 100) for _ in range(n)]
                    yield f"exhaustive n={n} graph={gi} weighting={j}", base.with_weights(ws)
    for i in range(random_count):
        cfg = GeneratorConfig(seed=seed * 1_000_003 + i, max_n=random_max_n, zero_prob=0.25)
        yield f"random seed={cfg.seed}", random_even_bipartite(cfg)


def search_counterexample(seed: int = 0, lemma_notes: bool = True, on_instance: Callable | None = None, **kw) -> SearchResult:
    """Look for an even connected bipartite graph on which Alice gets less than half.

    A finding is a CONJ-1.1 report with a reloadable witness. Single-vertex
    lemma-style inequality failures are collected separately as notes.
    """
    res = SearchResult()
    for label, g in search_instances(seed, **kw):
        res.instances += 1
        sc = Scores(g)
        n1, w = sc.N(1), g.weight()
        if 2 * n1 < w:
            rep = ClaimReport("CONJ-1.1", label, False, _witness(g, None, {"N(G,1)": n1, "w(G)": w}, "2 N(G,1) >= w(G)", meta={"seed": seed}))
            res.findings.append(rep)
            if on_instance:
                on_instance(rep)
        if lemma_notes:
            res.notes.extend(_lemma_style_notes(g, sc, label))
    return res


# ---------------------------------------------------------------- corpora


def _cfg(seed: int, i: int, **kw) -> GeneratorConfig:
    return GeneratorConfig(seed=seed * 1_000_003 + i, **kw)


def _random_roots(g: WeightedGraph, rng: random.Random, count: int) -> list[int]:
    roots = [1 << v for v in range(g.n)]
    for _ in range(count):
        r = 0
        while not r:
            r = mask_of(v for v in range(g.n) if rng.random() < 0.4)
        roots.append(r)
    roots.append(g.full)
    return roots


def corpus_observations(count: int = 500, max_n: int = 8, seed: int = 0, tree_weightings: int = 3) -> Iterator[ClaimReport]:
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        for ti, t in enumerate(nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]):
            for j in range(tree_weightings):
                g = WeightedGraph.from_edges(n, list(t.edges), [rng.randint(0, 100) for _ in range(n)])
                yield from check_observations(g, _random_roots(g, rng, 2), f"tree n={n} #{ti} weighting={j}")
    for i in range(count):
        cfg = _cfg(seed, i, max_n=max_n, edge_prob=0.6, zero_prob=0.2)
        g = random_connected(cfg)
        yield from check_observations(g, _random_roots(g, rng, 2), f"connected seed={cfg.seed}")


def corpus_kmn(count: int = 500, max_n: int = 12, seed: int = 0) -> Iterator[ClaimReport]:
    for i in range(count):
        cfg = _cfg(seed, i, max_n=max_n, max_class=3, zero_prob=0.2, max_attach=3)
        pg = random_kmn_tree(cfg)
        yield check_lemma_kmn(pg, f"kmn-tree seed={cfg.seed}")


def corpus_gameB(count: int = 200, max_n: int = 12, seed: int = 0, with_strategy: bool = True) -> Iterator[ClaimReport]:
    for i in range(count):
        cfg = _cfg(seed, i, max_n=max_n, parity="even", zero_prob=0.2, edge_prob=0.4)
        g, part_1 = random_split_instance(cfg)
        yield from check_lemma_gameB(g, SubgameAssignment.from_split(g, part_1), f"split seed={cfg.seed}", with_strategy)


def _htree_cfg(seed, i, max_n, parity=None) -> GeneratorConfig:
    """Config pinned to a vertex count drawn uniformly from [2, max_n] (matching parity)."""
    rng = random.Random(seed * 7919 + i)
    sizes = [n for n in range(2, max_n + 1) if parity is None or (n % 2 == 0) == (parity == "even")]
    target = rng.choice(sizes)
    return _cfg(seed, i, min_n=target, max_n=target, parity=parity, max_k=6, max_class=3,
                attach_prob=rng.choice((0.0, 0.3, 0.6)), max_attach=3, zero_prob=0.25)


def corpus_lemma1(count: int = 500, max_n: int = 14, seed: int = 0) -> Iterator[ClaimReport]:
    for i in range(count):
        cfg = _htree_cfg(seed, i, max_n)
        pg = random_bt_tree(cfg)
        yield from check_lemma1(pg, f"h-tree n={pg.n} seed={cfg.seed}")


def corpus_lemma2(count: int = 500, max_n: int = 14, seed: int = 0) -> Iterator[ClaimReport]:
    for i in range(count):
        cfg = _htree_cfg(seed, i, max_n, parity="even")
        pg = random_bt_tree(cfg)
        yield from check_lemma2(pg, f"even h-tree n={pg.n} seed={cfg.seed}")


def corpus_theorem(count: int = 500, max_n: int = 16, seed: int = 0, paths: int = 200) -> Iterator[ClaimReport]:
    for i in range(count):
        cfg = _htree_cfg(seed, i, max_n, parity="even")
        pg = random_bt_tree(cfg)
        yield from check_theorem(pg, f"even bt-tree n={pg.n} seed={cfg.seed}")
    for i in range(paths):
        cfg = _cfg(seed, count + i, min_n=2, max_n=max_n, parity="even", zero_prob=0.3)
        yield check_winkler_path(random_path(cfg), f"even path seed={cfg.seed}")


def corpus_corollary(count: int = 200, max_n: int = 14, seed: int = 0, strategy_count: int = 100) -> Iterator[ClaimReport]:
    for i in range(count):
        target = random.Random(seed * 7919 + i).choice(range(4, max_n + 1, 2))
        cfg = _cfg(seed, i, min_n=target, max_n=target, parity="even", min_k=3, max_k=7, max_class=3, zero_prob=0.2)
        pg = random_blowup_cycle(cfg)
        yield from check_corollary(pg, f"even cycle blow-up n={pg.n} seed={cfg.seed}", with_strategy=i < strategy_count)


def corpus_conjecture(count: int = 10_000, max_n: int = 10, seed: int = 0, max_exhaustive_n: int = 8,
                      zero_one_max_n: int = 6) -> Iterator[ClaimReport]:
    res = search_counterexample(seed, lemma_notes=False, random_count=count, random_max_n=max_n,
                                max_exhaustive_n=max_exhaustive_n, zero_one_max_n=zero_one_max_n)
    yield from res.findings
    if not res.findings:
        yield ClaimReport("CONJ-1.1", f"{res.instances} instances", True)


@dataclass(frozen=True)
class ClaimSpec:
    run: Callable[..., Iterator[ClaimReport]]
    count: int
    max_n: int
    prefix: str


CLAIMS: dict[str, ClaimSpec] = {
    "OBS-2.1": ClaimSpec(corpus_observations, 500, 8, "OBS-2.1"),
    "OBS-2.2": ClaimSpec(corpus_observations, 500, 8, "OBS-2.2"),
    "OBS-2.3": ClaimSpec(corpus_observations, 500, 8, "OBS-2.3"),
    "LEM-2.4": ClaimSpec(corpus_kmn, 500, 12, "LEM-2.4"),
    "LEM-3.1": ClaimSpec(corpus_gameB, 200, 12, "LEM-3.1"),
    "LEM-3.2": ClaimSpec(corpus_lemma1, 500, 14, "LEM-3.2"),
    "LEM-3.3": ClaimSpec(corpus_lemma2, 500, 14, "LEM-3.3"),
    "THM-1.2": ClaimSpec(corpus_theorem, 500, 16, "THM-1.2"),
    "COR-1.3": ClaimSpec(corpus_corollary, 200, 14, "COR-1.3"),
    "CONJ-1.1": ClaimSpec(corpus_conjecture, 10_000, 10, "CONJ-1.1"),
}

# smaller corpora for `verify --all`
DESK_COUNTS = {"OBS": 100, "LEM-2.4": 200, "LEM-3.1": 60, "LEM-3.2": 150, "LEM-3.3": 150,
               "THM-1.2": 150, "COR-1.3": 60, "CONJ-1.1": 1000}


def run_claim(claim: str, count: int | None = None, max_n: int | None = None, seed: int = 0) -> Iterator[ClaimReport]:
    if claim not in CLAIMS:
        raise KeyError(claim)
    spec = CLAIMS[claim]
    for rep in spec.run(count=spec.count if count is None else count, max_n=spec.max_n if max_n is None else max_n, seed=seed):
        if rep.claim.startswith(spec.prefix):
            yield rep


def run_all(seed: int = 0, desk: bool = True) -> Iterator[ClaimReport]:
    """Every claim once; the three observations share one corpus pass."""
    obs_count = DESK_COUNTS["OBS"] if desk else None
    yield from corpus_observations(count=obs_count or 500, seed=seed)
    for claim in ("LEM-2.4", "LEM-3.1", "LEM-3.2", "LEM-3.3", "THM-1.2", "COR-1.3", "CONJ-1.1"):
        yield from run_claim(claim, DESK_COUNTS[claim] if desk else None, seed=seed)
