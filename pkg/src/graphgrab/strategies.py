"""Move-selection policies for :func:`graphgrab.engine.play_out`.

A strategy exposes ``choose(remaining, history) -> vertex``. Every strategy
here depends on the remaining set only and says so with ``markov = True``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import NORMAL, GameMode, SolvedGame, resolve_player, solve
from .families import PartitionedGraph, remainder_shape
from .graph import (
    ContractError,
    WeightedGraph,
    feasible_moves_rooted,
    induced,
    mask_of,
    members,
    neighborhood,
    popcount,
    roots_cover,
)


class InvariantBreach(AssertionError):
    """A structural claim a strategy relies on failed during play."""


class Strategy:
    markov = True

    def choose(self, remaining: int, history: tuple[int, ...]) -> int:
        raise NotImplementedError


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class OptimalStrategy(Strategy):
    def __init__(self, handle: SolvedGame):
        self.handle = handle

    def choose(self, remaining, history):
        return self.handle.best_move(remaining)


def optimal_strategy(g: WeightedGraph, mode: GameMode = NORMAL) -> OptimalStrategy:
    return OptimalStrategy(solve(g, mode))


class MinWeightStrategy(Strategy):
    """Greedy: the lightest legal vertex, ties to the smallest index."""

    def __init__(self, g: WeightedGraph, mode: GameMode = NORMAL):
        self.g = g
        self.mode = mode

    def choose(self, remaining, history):
        legal = [v for v in members(remaining) if self.mode.legal(self.g, remaining, v) is None]
        return min(legal, key=lambda v: (self.g.weights[v], v))


@dataclass(frozen=True)
class SubgameAssignment:
    """A vertex split into two rooted subgames and the role played in each.

    ``role_1``/``role_2`` are player references (1, 2, -1, -2) resolved against
    each part's size. The default roles are those of the first player in the
    game rooted at ``root_1``: last-but-one in part 1 and last in part 2.
    """

    part_1: int
    root_1: int
    part_2: int
    root_2: int
    role_1: int = -2
    role_2: int = -1

    @classmethod
    def from_split(cls, g: WeightedGraph, part_1: int, role_1: int = -2, role_2: int = -1) -> "SubgameAssignment":
        part_2 = g.full & ~part_1
        return cls(part_1, part_1 & neighborhood(g, part_2), part_2, part_2 & neighborhood(g, part_1), role_1, role_2)

    @property
    def sizes(self) -> tuple[int, int]:
        return popcount(self.part_1), popcount(self.part_2)

    def parities(self) -> tuple[int, int]:
        """Residue mod 2 of the 1-based subgame move indices this side makes."""
        out = []
        for role, size in zip((self.role_1, self.role_2), self.sizes):
            out.append(1 if resolve_player(role, size) == 1 else 0)
        return out[0], out[1]

    def validate(self, g: WeightedGraph) -> None:
        if self.part_1 & self.part_2 or self.part_1 | self.part_2 != g.full:
            raise ContractError("parts must partition the vertex set")
        if not self.part_1 or not self.part_2:
            raise ContractError("both parts must be nonempty")
        if self.root_1 != self.part_1 & neighborhood(g, self.part_2):
            raise ContractError("root_1 must be the boundary of part_1")
        if self.root_2 != self.part_2 & neighborhood(g, self.part_1):
            raise ContractError("root_2 must be the boundary of part_2")
        for u in members(self.root_1):
            if g.nbr[u] & self.root_2 != self.root_2:
                raise ContractError("boundaries are not completely joined")
        if not roots_cover(g, self.part_1, self.root_1) or not roots_cover(g, self.part_2, self.root_2):
            raise ContractError("a boundary set misses a component of its part")
        p1, p2 = self.parities()
        if (p1 + p2) % 2 != 1:
            raise ContractError("subgame roles are not complementary")


class CompositeStrategy(Strategy):
    """Optimal rooted play in two subgames, interleaved by move-index parity.

    At each turn exactly one subgame must have its next move index on this
    side's parity; the optimal rooted move of that subgame is played. Breaches
    of that parity invariant, or of feasibility transfer between the subgames
    and the whole game rooted at ``game_root``, raise :class:`InvariantBreach`.
    """

    def __init__(self, g: WeightedGraph, assign: SubgameAssignment, game_root: int | None = None):
        assign.validate(g)
        self.g = g
        self.assign = assign
        self.game_root = assign.root_1 if game_root is None else game_root
        self.parity = assign.parities()
        self._parts = (assign.part_1, assign.part_2)
        self._roots = (assign.root_1, assign.root_2)
        self._subs = []
        for part, root in zip(self._parts, self._roots):
            sub, old = induced(g, part)
            local_root = mask_of(i for i, v in enumerate(old) if root >> v & 1)
            self._subs.append((solve(sub, GameMode.rooted(local_root)), old))
        self.turns = 0

    def subgame_value(self, i: int, role: int) -> Fraction:
        return self._subs[i][0].score(role)

    def choose(self, remaining, history):
        if not remaining:
            raise ContractError("game is over")
        wants = []
        for i, (part, root) in enumerate(zip(self._parts, self._roots)):
            left = remaining & part
            if not roots_cover(self.g, left, root):
                raise InvariantBreach(f"opponent move left subgame {i + 1} without a root in some component")
            claimed = popcount(part) - popcount(left)
            if left and (claimed + 1) % 2 == self.parity[i]:
                wants.append(i)
        if len(wants) != 1:
            raise InvariantBreach(f"{len(wants)} subgames are on this side's parity at state {remaining:#x}")
        i = wants[0]
        handle, old = self._subs[i]
        local = mask_of(j for j, v in enumerate(old) if remaining >> v & 1)
        v = old[handle.best_move(local)]
        if not feasible_moves_rooted(self.g, remaining, self.game_root) >> v & 1:
            raise InvariantBreach(f"subgame move {v} is not feasible in the whole rooted game")
        self.turns += 1
        return v


def composite_strategy(g: WeightedGraph, assign: SubgameAssignment, game_root: int | None = None) -> CompositeStrategy:
    return CompositeStrategy(g, assign, game_root)


class MaxFirstStrategy(Strategy):
    """For even blow-ups of cycles: grab a heaviest vertex while the rest is a cycle blow-up.

    Otherwise (the remainder is a path blow-up) play optimally. On every turn
    the remainder is checked to be an even blow-up of a path or a cycle.
    """

    def __init__(self, pg: PartitionedGraph, handle: SolvedGame | None = None):
        if remainder_shape(pg, pg.graph.full) != "cycle":
            raise ContractError("max-first strategy needs a blow-up of a cycle")
        self.pg = pg
        self.g = pg.graph
        self.handle = handle or solve(self.g, NORMAL)
        self.structure_checks = 0

    def choose(self, remaining, history):
        shape = remainder_shape(self.pg, remaining)
        if shape is None or popcount(remaining) % 2:
            raise InvariantBreach(f"remainder {remaining:#x} is not an even blow-up of a path or cycle")
        self.structure_checks += 1
        if shape == "cycle":
            return max(members(remaining), key=lambda v: (self.g.weights[v], -v))
        return self.handle.best_move(remaining)


def max_first_strategy(pg: PartitionedGraph) -> MaxFirstStrategy:
    return MaxFirstStrategy(pg)
