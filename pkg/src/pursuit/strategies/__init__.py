"""Cop and robber strategies, and the simulator that plays them against each other."""

from .escape import EscapeRobber, robber_escape_policy
from .guard import (
    GuardError,
    PathGuard,
    Territory,
    TerritorySide,
    field_graph,
    guard_path_policy,
    reachable_region,
    territory_split,
    two_path_guard,
)
from .pairwise import SubsetRobber
from .simulate import Outcome, Transcript, check_transcript, simulate
from .three_cops import ThreeCopPolicy, three_cop_policy

__all__ = [
    "EscapeRobber",
    "GuardError",
    "Outcome",
    "PathGuard",
    "SubsetRobber",
    "Territory",
    "TerritorySide",
    "ThreeCopPolicy",
    "Transcript",
    "check_transcript",
    "field_graph",
    "guard_path_policy",
    "reachable_region",
    "robber_escape_policy",
    "simulate",
    "territory_split",
    "three_cop_policy",
    "two_path_guard",
]
