"""Exact values of the normal and rooted grabbing games.

A game state is the mask of unclaimed vertices. Whose turn it is follows from
how many vertices have been claimed, and in the rooted game the live root set
is ``root & remaining``, so the mask alone keys every table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import _kernel
from .graph import (
    CapacityError,
    ContractError,
    WeightedGraph,
    cut_vertex_reason,
    is_connected,
    members,
    roots_cover,
)

MAX_STATES = 1 << 26
MAX_SOLVE_VERTICES = MAX_STATES.bit_length() - 1
BRUTE_FORCE_LIMIT = 12
BEST_RESPONSE_LIMIT = 16
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class GameMode:
    """Normal game (``root is None``) or the game rooted at a vertex mask."""

    root: int | None = None

    @classmethod
    def rooted(cls, root: int) -> "GameMode":
        return cls(root)

    @property
    def is_rooted(self) -> bool:
        return self.root is not None

    def check(self, g: WeightedGraph) -> None:
        if self.root is None:
            if not is_connected(g):
                raise ContractError("normal game needs a connected graph")
            return
        if self.root & ~g.full:
            raise ContractError("root set contains vertices outside the graph")
        if not roots_cover(g, g.full, self.root):
            raise ContractError("root set misses a component of the graph")

    def legal(self, g: WeightedGraph, remaining: int, v: int) -> str | None:
        return cut_vertex_reason(g, remaining, v, self.root)


NORMAL = GameMode()


def resolve_player(k: int, n: int) -> int:
    """Map a player reference in {1, 2, -1, -2} to 1 or 2 for an ``n``-vertex game."""
    if k in (1, 2):
        return k
    if k == -1:
        return 1 if n % 2 else 2
    if k == -2:
        return 2 if n % 2 else 1
    raise ContractError(f"player must be one of 1, 2, -1, -2, not {k!r}")


@dataclass(frozen=True)
class SolveResult:
    value_to_move: Fraction
    optimal_moves: int


def _integer_weights(g: WeightedGraph) -> tuple[list[int], int]:
    scale = 1
    for w in g.weights:
        scale = math.lcm(scale, w.denominator)
    return [int(w * scale) for w in g.weights], scale


class SolvedGame:
    """Value table of one game, valid for every reachable state.

    Build with :func:`solve`. Internally stores, per valid mask, the mover's
    total minus the opponent's total (in integer units of ``1/scale``).
    """

    def __init__(self, g: WeightedGraph, mode: GameMode):
        mode.check(g)
        if g.n > MAX_SOLVE_VERTICES:
            raise CapacityError(f"{g.n} vertices exceeds the {MAX_STATES}-state table")
        self.g = g
        self.mode = mode
        self._w, self.scale = _integer_weights(g)
        nbr = np.array(g.nbr, dtype=np.int64)
        self._valid = _kernel.valid_states(g.n, nbr, mode.root or 0, mode.is_rooted)
        if sum(self._w) < _INT64_SAFE:
            self._diff = np.zeros(1 << g.n, dtype=np.int64)
            bad = _kernel.fill_differences(g.n, np.array(self._w, dtype=np.int64), self._valid, self._diff)
        else:
            self._diff = np.zeros(1 << g.n, dtype=object)
            self._diff[:] = 0
            bad = _kernel.fill_differences.py_func(g.n, self._w, self._valid, self._diff)
        if bad != -1:
            raise AssertionError(f"valid state {bad:#x} has no feasible move")
        self._moves_cache: dict[int, int] = {}

    @property
    def n(self) -> int:
        return self.g.n

    def is_state(self, remaining: int) -> bool:
        return bool(self._valid[remaining])

    def _check_state(self, remaining: int) -> None:
        if remaining & ~self.g.full or not self._valid[remaining]:
            raise ContractError(f"{remaining:#x} is not a reachable state of this game")

    def _scaled_total(self, remaining: int) -> int:
        return sum(self._w[v] for v in members(remaining))

    def _scaled_value(self, remaining: int) -> int:
        # mover + other = total, mover - other = diff
        return (self._scaled_total(remaining) + int(self._diff[remaining])) // 2

    def value(self, remaining: int | None = None) -> Fraction:
        """Optimal total the player to move collects from ``remaining`` onward."""
        if remaining is None:
            remaining = self.g.full
        self._check_state(remaining)
        return Fraction(self._scaled_value(remaining), self.scale)

    def feasible_moves(self, remaining: int) -> int:
        self._check_state(remaining)
        out = 0
        for v in members(remaining):
            if self._valid[remaining ^ (1 << v)]:
                out |= 1 << v
        return out

    def optimal_moves(self, remaining: int | None = None) -> int:
        if remaining is None:
            remaining = self.g.full
        cached = self._moves_cache.get(remaining)
        if cached is not None:
            return cached
        self._check_state(remaining)
        best = self._diff[remaining]
        out = 0
        for v in members(remaining):
            c = remaining ^ (1 << v)
            if self._valid[c] and self._w[v] - self._diff[c] == best:
                out |= 1 << v
        self._moves_cache[remaining] = out
        return out

    def best_move(self, remaining: int) -> int:
        """Smallest-index optimal move."""
        opt = self.optimal_moves(remaining)
        return (opt & -opt).bit_length() - 1

    def result(self, remaining: int | None = None) -> SolveResult:
        return SolveResult(self.value(remaining), self.optimal_moves(remaining))

    def score(self, k: int) -> Fraction:
        """N(G, k) for the normal game or R(G, S, k) for the rooted one."""
        first = self.value()
        if resolve_player(k, self.n) == 1:
            return first
        return self.g.weight() - first


def solve(g: WeightedGraph, mode: GameMode = NORMAL) -> SolvedGame:
    return SolvedGame(g, mode)


def score(g: WeightedGraph, mode: GameMode, k: int) -> Fraction:
    return solve(g, mode).score(k)


def brute_force_score(g: WeightedGraph, mode: GameMode, k: int) -> Fraction:
    """Same contract as :func:`score`, by unmemoised recursion over Python sets.

    Independent of the bit-set tables; meant as an oracle for small graphs.
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise CapacityError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices")
    adj = {v: set() for v in range(g.n)}
    for a, b in g.edges():
        adj[a].add(b)
        adj[b].add(a)
    roots = None if mode.root is None else {v for v in range(g.n) if mode.root >> v & 1}

    def pieces(vs):
        left = set(vs)
        while left:
            start = left.pop()
            comp = {start}
            todo = [start]
            while todo:
                for b in adj[todo.pop()]:
                    if b in left:
                        left.remove(b)
                        comp.add(b)
                        todo.append(b)
            yield comp

    def ok(vs):
        if roots is None:
            return sum(1 for _ in pieces(vs)) <= 1
        return all(c & roots for c in pieces(vs))

    if (mode.root or 0) & ~g.full or not ok(set(range(g.n))):
        raise ContractError("invalid starting position for brute force")

    # negamax on (mover total - opponent total) with alpha-beta cutoffs
    def diff(vs, alpha, beta):
        if not vs:
            return Fraction(0)
        out = None
        for v in sorted(vs, key=lambda u: -g.weights[u]):
            rest = vs - {v}
            if not ok(rest):
                continue
            got = g.weights[v] - diff(rest, g.weights[v] - beta, g.weights[v] - alpha)
            if out is None or got > out:
                out = got
            if out > alpha:
                alpha = out
            if alpha >= beta:
                break
        if out is None:
            raise AssertionError("position without a feasible move")
        return out

    total = sum(g.weights, Fraction(0))
    d = diff(frozenset(range(g.n)), -total - 1, total + 1)
    first = (total + d) / 2
    return first if resolve_player(k, g.n) == 1 else total - first


class InfeasibleMove(ContractError):
    def __init__(self, who: str, vertex: int, reason: str):
        super().__init__(f"{who} strategy chose vertex {vertex}: {reason}")
        self.who = who
        self.vertex = vertex
        self.reason = reason


@dataclass(frozen=True)
class Move:
    player: int
    vertex: int
    weight: Fraction


@dataclass
class Transcript:
    moves: list[Move] = field(default_factory=list)

    @property
    def totals(self) -> tuple[Fraction, Fraction]:
        first = sum((m.weight for m in self.moves if m.player == 1), Fraction(0))
        second = sum((m.weight for m in self.moves if m.player == 2), Fraction(0))
        return first, second

    @property
    def vertices(self) -> list[int]:
        return [m.vertex for m in self.moves]


def play_out(g: WeightedGraph, mode: GameMode, first, second) -> Transcript:
    """Play the whole game between two strategies.

    Each strategy is any object with ``choose(remaining, history) -> vertex``.
    """
    mode.check(g)
    remaining = g.full
    history: tuple[int, ...] = ()
    transcript = Transcript()
    while remaining:
        player = 1 if len(history) % 2 == 0 else 2
        strat = first if player == 1 else second
        v = strat.choose(remaining, history)
        reason = mode.legal(g, remaining, v) if 0 <= v < g.n else "no such vertex"
        if reason:
            raise InfeasibleMove("first" if player == 1 else "second", v, reason)
        transcript.moves.append(Move(player, v, g.weights[v]))
        remaining &= ~(1 << v)
        history += (v,)
    return transcript


def best_response_value(g: WeightedGraph, mode: GameMode, fixed, fixed_role: str,
                        feasible: Callable[[int], int] | None = None) -> Fraction:
    """Total the ``fixed`` strategy secures against an adversary minimising it.

    ``fixed_role`` is ``"first"`` or ``"second"``. Strategies flagged
    ``markov = True`` depend only on the remaining set, which allows memoising
    on it; others are re-queried along every line.
    """
    if g.n > BEST_RESPONSE_LIMIT:
        raise CapacityError(f"best response limited to {BEST_RESPONSE_LIMIT} vertices")
    if fixed_role not in ("first", "second"):
        raise ContractError(f"fixed_role must be 'first' or 'second', not {fixed_role!r}")
    mode.check(g)
    if feasible is None:
        table = solve(g.with_weights([0] * g.n), mode)
        feasible = table.feasible_moves
    my_parity = 0 if fixed_role == "first" else 1
    markov = getattr(fixed, "markov", False)
    memo: dict[int, Fraction] = {}

    def go(remaining: int, history: tuple[int, ...]) -> Fraction:
        if not remaining:
            return Fraction(0)
        if markov and remaining in memo:
            return memo[remaining]
        if len(history) % 2 == my_parity:
            v = fixed.choose(remaining, history)
            if not (0 <= v < g.n and feasible(remaining) >> v & 1):
                raise InfeasibleMove(fixed_role, v, mode.legal(g, remaining, v) or "not a member of the remaining set")
            out = g.weights[v] + go(remaining & ~(1 << v), history + (v,))
        else:
            out = min(go(remaining & ~(1 << v), history + (v,)) for v in members(feasible(remaining)))
        if markov:
            memo[remaining] = out
        return out

    return go(g.full, ())
