"""Exact solver, instance generators and claim checkers for the graph grabbing game."""

from .engine import NORMAL, GameMode, SolvedGame, brute_force_score, play_out, score, solve
from .graph import CapacityError, ContractError, WeightedGraph

__all__ = [
    "NORMAL",
    "CapacityError",
    "ContractError",
    "GameMode",
    "SolvedGame",
    "WeightedGraph",
    "brute_force_score",
    "play_out",
    "score",
    "solve",
]
