"""Weighted graphs over bit-set vertex masks.

Vertices are ``0..n-1``. A vertex set is a plain ``int`` whose bit ``v`` is set
when ``v`` belongs to the set; every query here takes and returns masks.
Weights are :class:`fractions.Fraction` so sums and comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

MAX_VERTICES = 64


class ContractError(ValueError):
    """A precondition of a graph or game operation was violated."""


class CapacityError(ContractError):
    """An instance is too large for the exact solver."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_weight(value) -> Fraction:
    """Parse an int, Fraction or decimal/fraction string into an exact weight."""
    if isinstance(value, float):
        raise ContractError(f"refusing inexact float weight {value!r}; pass a string")
    w = Fraction(value)
    if w < 0:
        raise ContractError(f"negative weight {value!r}")
    return w


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with exact non-negative vertex weights.

    ``nbr[v]`` is the neighbour mask of ``v``. Build with :meth:`from_edges`.
    """

    n: int
    nbr: tuple[int, ...]
    weights: tuple[Fraction, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], weights: Sequence | None = None) -> "WeightedGraph":
        if n < 0 or n > MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        nbr = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ContractError(f"edge ({a}, {b}) references a vertex outside [0, {n})")
            if a == b:
                raise ContractError(f"self-loop at {a}")
            nbr[a] |= 1 << b
            nbr[b] |= 1 << a
        if weights is None:
            ws = (Fraction(0),) * n
        else:
            if len(weights) != n:
                raise ContractError(f"{len(weights)} weights for {n} vertices")
            ws = tuple(to_weight(w) for w in weights)
        return cls(n, tuple(nbr), ws)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in members(self.nbr[a]) if a < b]

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.nbr[a] >> b & 1)

    def weight(self, mask: int | None = None) -> Fraction:
        if mask is None:
            mask = self.full
        return sum((self.weights[v] for v in members(mask)), Fraction(0))

    def with_weights(self, weights: Sequence) -> "WeightedGraph":
        if len(weights) != self.n:
            raise ContractError(f"{len(weights)} weights for {self.n} vertices")
        return WeightedGraph(self.n, self.nbr, tuple(to_weight(w) for w in weights))

    def relabel(self, perm: Sequence[int]) -> "WeightedGraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        weights = [Fraction(0)] * self.n
        for v in range(self.n):
            weights[perm[v]] = self.weights[v]
        edges = [(perm[a], perm[b]) for a, b in self.edges()]
        return WeightedGraph.from_edges(self.n, edges, weights)


def _reach(g: WeightedGraph, seeds: int, within: int) -> int:
    seen = seeds & within
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = g.nbr[low.bit_length() - 1] & within & ~seen
        seen |= new
        frontier |= new
    return seen


def components(g: WeightedGraph, remaining: int) -> list[int]:
    """Connected components of the subgraph induced by ``remaining``.

    Ordered by smallest contained vertex.
    """
    out = []
    left = remaining
    while left:
        comp = _reach(g, left & -left, remaining)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: WeightedGraph, remaining: int | None = None) -> bool:
    if remaining is None:
        remaining = g.full
    if not remaining:
        return True
    return _reach(g, remaining & -remaining, remaining) == remaining


def roots_cover(g: WeightedGraph, remaining: int, roots: int) -> bool:
    """True when every component of ``remaining`` contains a vertex of ``roots``."""
    return _reach(g, roots & remaining, remaining) == remaining


def neighborhood(g: WeightedGraph, s: int) -> int:
    out = 0
    for v in members(s):
        out |= g.nbr[v]
    return out


def induced(g: WeightedGraph, mask: int) -> tuple[WeightedGraph, list[int]]:
    """Induced subgraph relabelled to ``0..k-1`` plus the old id of each new vertex."""
    old = members(mask)
    new_id = {v: i for i, v in enumerate(old)}
    edges = [(new_id[a], new_id[b]) for a, b in g.edges() if a in new_id and b in new_id]
    return WeightedGraph.from_edges(len(old), edges, [g.weights[v] for v in old]), old


def feasible_moves_normal(g: WeightedGraph, remaining: int) -> int:
    if not remaining or not is_connected(g, remaining):
        raise ContractError("normal game state must be a nonempty connected vertex set")
    out = 0
    for v in members(remaining):
        if is_connected(g, remaining & ~(1 << v)):
            out |= 1 << v
    return out


def feasible_moves_rooted(g: WeightedGraph, remaining: int, s: int) -> int:
    if not roots_cover(g, remaining, s):
        raise ContractError("root set misses a component of the remaining graph")
    out = 0
    for v in members(remaining):
        rest = remaining & ~(1 << v)
        if roots_cover(g, rest, s & rest):
            out |= 1 << v
    return out


def cut_vertex_reason(g: WeightedGraph, remaining: int, v: int, roots: int | None = None) -> str | None:
    """Why claiming ``v`` is illegal, or ``None`` when it is a legal move."""
    if not remaining >> v & 1:
        return "already claimed"
    rest = remaining & ~(1 << v)
    if roots is None:
        return None if is_connected(g, rest) else "cut vertex"
    return None if roots_cover(g, rest, roots & rest) else "strands a component with no root"


def two_coloring(g: WeightedGraph) -> list[int] | None:
    """A proper 2-colouring (one colour per vertex) or ``None`` if not bipartite."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            a = stack.pop()
            for b in members(g.nbr[a]):
                if color[b] < 0:
                    color[b] = 1 - color[a]
                    stack.append(b)
                elif color[b] == color[a]:
                    return None
    return color
