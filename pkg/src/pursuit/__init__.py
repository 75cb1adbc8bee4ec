"""Exact cops-and-robbers tools for 1-planar graphs."""

from .game import ClaimViolation, GameState, IllegalMove, Side
from .graph import Graph, GraphError
from .solver import BudgetExceeded, GameTable, cop_number, optimal_policy, solve

__all__ = [
    "BudgetExceeded",
    "ClaimViolation",
    "GameState",
    "GameTable",
    "Graph",
    "GraphError",
    "IllegalMove",
    "Side",
    "cop_number",
    "optimal_policy",
    "solve",
]
