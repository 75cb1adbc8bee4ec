"""Positions, moves and the policy interface shared by the solver and the strategies."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Protocol, Sequence, Union

from .graph import Graph


class Side(enum.Enum):
    COPS = "cops"
    ROBBER = "robber"


class ClaimViolation(RuntimeError):
    """A strategy reached a position its correctness argument says cannot occur.

    This is falsification evidence, not an ordinary failure; callers should
    surface it rather than swallow it.
    """

    def __init__(self, claim: str, detail: str) -> None:
        super().__init__(f"CLAIM_VIOLATION [{claim}]: {detail}")
        self.claim = claim
        self.detail = detail


class IllegalMove(RuntimeError):
    pass


@dataclass(frozen=True)
class GameState:
    cops: tuple[int, ...]
    robber: int
    to_move: Side

    def __post_init__(self) -> None:
        if list(self.cops) != sorted(self.cops):
            raise ValueError("cop positions must be sorted")

    @classmethod
    def of(cls, cops: Sequence[int], robber: int, to_move: Side) -> "GameState":
        return cls(tuple(sorted(cops)), robber, to_move)

    @property
    def captured(self) -> bool:
        return self.robber in self.cops


# One entry per position after a half-move: (cop positions in policy order, robber).
Position = tuple[tuple[int, ...], int]
CopMove = tuple[int, ...]
Move = Union[CopMove, int]


class Policy(Protocol):
    """Deterministic move chooser for one side.

    ``history`` holds every position so far, oldest first; ``cops`` in a
    position keep the order the cop policy assigned them (cop identity
    matters to strategies that give each cop a job).
    """

    side: Side

    def place_cops(self, g: Graph) -> tuple[int, ...]: ...

    def place_robber(self, g: Graph, cops: tuple[int, ...]) -> int: ...

    def move(self, g: Graph, history: Sequence[Position]) -> Move: ...


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    return (v, *g.adjacency[v])


def is_legal_step(g: Graph, a: int, b: int) -> bool:
    return a == b or g.has_edge(a, b)
