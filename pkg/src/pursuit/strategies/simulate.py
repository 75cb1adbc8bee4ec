"""Round-based play between two policies, transcripts and their text format."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..game import IllegalMove, Policy, Position, Side, is_legal_step
from ..graph import Graph


@dataclass(frozen=True)
class Outcome:
    captured: bool
    round: int

    def __str__(self) -> str:
        return f"{'CAPTURED' if self.captured else 'SURVIVED'}({self.round})"


@dataclass
class Transcript:
    """Positions after every half-move.

    ``entries[i] = (round, cops, robber)``: round 0 is the placement, and each
    later round contributes the position after the cops move and the
    position after the robber moves.
    """

    entries: list[tuple[int, tuple[int, ...], int]] = field(default_factory=list)
    outcome: Outcome | None = None

    @property
    def half_moves(self) -> int:
        return len(self.entries) - 1

    def positions(self) -> list[Position]:
        return [(cops, robber) for _, cops, robber in self.entries]

    def to_text(self) -> str:
        lines = [f"{r};{','.join(map(str, cops))};{robber}" for r, cops, robber in self.entries]
        if self.outcome is not None:
            lines.append(f"# {self.outcome}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Transcript":
        t = cls()
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                kind, _, rest = body.partition("(")
                t.outcome = Outcome(kind == "CAPTURED", int(rest.rstrip(")")))
                continue
            r, cops, robber = line.split(";")
            t.entries.append((int(r), tuple(int(c) for c in cops.split(",") if c), int(robber)))
        return t


def check_transcript(g: Graph, t: Transcript) -> list[str]:
    """Independent legality audit; returns a list of problems (empty when clean)."""
    problems = []
    if not t.entries:
        return ["empty transcript"]
    captured_at = None
    for i, (r, cops, robber) in enumerate(t.entries):
        if any(not 0 <= c < g.n for c in (*cops, robber)):
            problems.append(f"entry {i}: vertex out of range")
            continue
        if robber in cops and captured_at is None:
            captured_at = i
        if i == 0:
            continue
        _, prev_cops, prev_robber = t.entries[i - 1]
        cop_half = i % 2 == 1
        if len(cops) != len(prev_cops):
            problems.append(f"entry {i}: cop count changed")
        elif cop_half:
            if prev_robber != robber:
                problems.append(f"entry {i}: robber moved on the cops' turn")
            for a, b in zip(prev_cops, cops):
                if not is_legal_step(g, a, b):
                    problems.append(f"entry {i}: cop step {a}->{b} is not legal")
        else:
            if prev_cops != cops:
                problems.append(f"entry {i}: cops moved on the robber's turn")
            if not is_legal_step(g, prev_robber, robber):
                problems.append(f"entry {i}: robber step {prev_robber}->{robber} is not legal")
    if captured_at is not None and captured_at != len(t.entries) - 1:
        problems.append("play continued after capture")
    if t.outcome is not None:
        if t.outcome.captured != (captured_at is not None):
            problems.append("outcome disagrees with positions")
        elif t.outcome.captured and t.entries[captured_at][0] != t.outcome.round:
            problems.append("capture round disagrees with positions")
    return problems


def _validate_cops(g: Graph, cops: Iterable[int], who: str) -> tuple[int, ...]:
    cops = tuple(int(c) for c in cops)
    for c in cops:
        if not 0 <= c < g.n:
            raise IllegalMove(f"{who}: cop placed on missing vertex {c}")
    return cops


def simulate(g: Graph, cop_policy: Policy, robber_policy: Policy, max_rounds: int) -> Transcript:
    """Play up to ``max_rounds`` rounds (cops move, then robber) after placement."""
    if cop_policy.side is not Side.COPS or robber_policy.side is not Side.ROBBER:
        raise ValueError("need a cop policy and a robber policy")
    cop_name = type(cop_policy).__name__
    rob_name = type(robber_policy).__name__
    cops = _validate_cops(g, cop_policy.place_cops(g), cop_name)
    robber = int(robber_policy.place_robber(g, cops))
    if not 0 <= robber < g.n:
        raise IllegalMove(f"{rob_name}: robber placed on missing vertex {robber}")
    t = Transcript([(0, cops, robber)])
    history: list[Position] = [(cops, robber)]
    if robber in cops:
        t.outcome = Outcome(True, 0)
        return t
    for rnd in range(1, max_rounds + 1):
        nxt = _validate_cops(g, cop_policy.move(g, history), cop_name)
        if len(nxt) != len(cops):
            raise IllegalMove(f"{cop_name}: returned {len(nxt)} cops, expected {len(cops)}")
        for a, b in zip(cops, nxt):
            if not is_legal_step(g, a, b):
                raise IllegalMove(f"{cop_name}: illegal cop step {a}->{b} in round {rnd}")
        cops = nxt
        history.append((cops, robber))
        t.entries.append((rnd, cops, robber))
        if robber in cops:
            t.outcome = Outcome(True, rnd)
            return t
        step = int(robber_policy.move(g, history))
        if not is_legal_step(g, robber, step):
            raise IllegalMove(f"{rob_name}: illegal robber step {robber}->{step} in round {rnd}")
        robber = step
        history.append((cops, robber))
        t.entries.append((rnd, cops, robber))
        if robber in cops:
            t.outcome = Outcome(True, rnd)
            return t
    t.outcome = Outcome(False, max_rounds)
    return t
