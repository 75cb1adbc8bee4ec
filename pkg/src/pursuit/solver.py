"""Exact k-cop game solving by retrograde analysis.

States pack as ``config_rank * n + robber`` where ``config_rank`` is the
colex rank of the sorted cop multiset. Two tables exist, one per side to
move. Labels propagate backward from capture positions level by level:
a cops-to-move state resolves on its first winning successor, a
robber-to-move state when its unresolved-successor counter reaches zero.
Level order makes the stored times exact (min for cops, max for robber).
"""

from __future__ import annotations

import itertools
import logging
import os
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from .game import GameState, Side
from .graph import Graph, GraphError

log = logging.getLogger(__name__)

DEFAULT_STATE_BUDGET = 500_000_000
BUDGET_ENV = "PURSUIT_BUDGET_STATES"
# elements per vectorized expansion chunk
_CHUNK = 4_000_000

UNRESOLVED = -1


class BudgetExceeded(MemoryError):
    """The requested solve does not fit the configured state or memory budget."""


def state_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_STATE_BUDGET


def _available_memory() -> int:
    try:
        return os.sysconf("SC_AVPHYS_PAGES") * os.sysconf("SC_PAGE_SIZE")
    except (ValueError, OSError):  # pragma: no cover - non-POSIX
        return 8 << 30


def config_count(n: int, k: int) -> int:
    return comb(n + k - 1, k)


def estimate(g: Graph, k: int) -> dict[str, int]:
    """State count and a byte estimate for ``solve(g, k)``."""
    configs = config_count(g.n, k)
    width = max((g.degree(v) + 1 for v in range(g.n)), default=1)
    # each config stores its deduplicated joint moves; bound by the average product
    avg = sum(g.degree(v) + 1 for v in range(g.n)) / max(g.n, 1)
    transitions = int(configs * min(avg**k, width**k))
    states = 2 * configs * g.n
    bytes_needed = states * 5 + transitions * 4 + configs * 8 * k + 8 * _CHUNK * 4
    return {"configs": configs, "states": states, "transitions": transitions, "bytes": bytes_needed}


class ConfigIndex:
    """Colex ranking of sorted cop multisets of size ``k`` over ``n`` vertices."""

    def __init__(self, n: int, k: int) -> None:
        self.n, self.k = n, k
        top = n + k
        self._binom = np.zeros((top + 1, k + 1), dtype=np.int64)
        for x in range(top + 1):
            for j in range(k + 1):
                self._binom[x, j] = comb(x, j)
        self.count = config_count(n, k)
        configs = np.array(
            list(itertools.combinations_with_replacement(range(n), k)), dtype=np.int64
        ).reshape(-1, k)
        order = self.rank_array(configs)
        self.configs = np.empty_like(configs)
        self.configs[order] = configs

    def rank_array(self, cops: np.ndarray) -> np.ndarray:
        """Ranks of rows already sorted ascending along the last axis."""
        shifted = cops + np.arange(self.k, dtype=np.int64)
        rank = np.zeros(cops.shape[:-1], dtype=np.int64)
        for i in range(self.k):
            rank += self._binom[shifted[..., i], i + 1]
        return rank

    def rank(self, cops: Sequence[int]) -> int:
        arr = np.sort(np.asarray(cops, dtype=np.int64)).reshape(1, self.k)
        return int(self.rank_array(arr)[0])


def _closed_neighborhoods(g: Graph) -> np.ndarray:
    width = max(g.degree(v) for v in range(g.n)) + 1 if g.n else 1
    nb = np.full((g.n, width), -1, dtype=np.int64)
    for v in range(g.n):
        row = (v, *g.adjacency[v])
        nb[v, : len(row)] = row
    return nb


def _joint_moves(index: ConfigIndex, nb: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """CSR (indptr, targets) of distinct successor configs for every config."""
    k = index.k
    width = nb.shape[1]
    fan = width**k
    block = max(1, _CHUNK // max(fan, 1))
    indptr = np.zeros(index.count + 1, dtype=np.int64)
    pieces = []
    for start in range(0, index.count, block):
        cfg = index.configs[start : start + block]
        b = cfg.shape[0]
        grids = []
        for i in range(k):
            shape = [b] + [1] * k
            shape[1 + i] = width
            grids.append(np.broadcast_to(nb[cfg[:, i]].reshape(shape), [b] + [width] * k))
        targets = np.stack(grids, axis=-1).reshape(b, fan, k)
        valid = (targets >= 0).all(axis=-1)
        targets = np.sort(np.where(targets < 0, 0, targets), axis=-1)
        ranks = np.where(valid, index.rank_array(targets), -1)
        ranks.sort(axis=1)
        keep = ranks >= 0
        keep[:, 1:] &= ranks[:, 1:] != ranks[:, :-1]
        indptr[start + 1 : start + b + 1] = keep.sum(axis=1)
        pieces.append(ranks[keep])
    np.cumsum(indptr, out=indptr)
    return indptr, np.concatenate(pieces).astype(np.int32)


def _csr_expand(indptr: np.ndarray, indices: np.ndarray, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """For each row id, all its CSR entries; returns (entries, position of source row)."""
    starts = indptr[rows]
    lens = indptr[rows + 1] - starts
    total = int(lens.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    src = np.repeat(np.arange(rows.size), lens)
    offsets = np.arange(total) - np.repeat(np.cumsum(lens) - lens, lens)
    return indices[starts[src] + offsets].astype(np.int64), src


@dataclass
class GameTable:
    """Solved k-cop game on one graph.

    ``cop_time[c, r]`` / ``robber_time[c, r]`` hold the number of remaining
    half-moves until capture under optimal play in the cops-to-move /
    robber-to-move state with cop config rank ``c`` and robber at ``r``;
    ``UNRESOLVED`` (-1) marks a robber win.
    """

    graph: Graph
    k: int
    index: ConfigIndex
    cop_time: np.ndarray
    robber_time: np.ndarray
    _moves: tuple[np.ndarray, np.ndarray] = field(repr=False)

    def _time(self, state: GameState) -> int:
        if len(state.cops) != self.k:
            raise ValueError(f"state has {len(state.cops)} cops, table solved for {self.k}")
        c = self.index.rank(state.cops)
        table = self.cop_time if state.to_move is Side.COPS else self.robber_time
        return int(table[c, state.robber])

    def is_cop_win(self, state: GameState) -> bool:
        return self._time(state) != UNRESOLVED

    def capture_time(self, state: GameState) -> int | None:
        t = self._time(state)
        return None if t == UNRESOLVED else t

    def label(self, state: GameState) -> str:
        return "COP_WIN" if self.is_cop_win(state) else "ROBBER_WIN"

    def winning_placements(self) -> np.ndarray:
        """Config ranks from which the cops win against every robber placement."""
        return np.flatnonzero((self.cop_time != UNRESOLVED).all(axis=1))

    @property
    def cop_win(self) -> bool:
        return self.winning_placements().size > 0

    def placement_value(self, rank: int) -> int | None:
        """Worst-case capture time over robber placements, or None if the robber escapes."""
        row = self.cop_time[rank]
        if (row == UNRESOLVED).any():
            return None
        return int(row.max())

    def successor_configs(self, rank: int) -> np.ndarray:
        indptr, targets = self._moves
        return targets[indptr[rank] : indptr[rank + 1]]

    @property
    def state_count(self) -> int:
        return 2 * self.cop_time.size


def solve(g: Graph, k: int, budget: int | None = None, max_bytes: int | None = None) -> GameTable:
    """Solve the k-cop game on ``g`` exactly.

    Raises :class:`BudgetExceeded` before allocating anything when the state
    count or the memory estimate is over budget.
    """
    if k < 1:
        raise ValueError("need at least one cop")
    if g.n == 0:
        raise GraphError("cannot play on an empty graph")
    if not g.is_connected():
        raise GraphError("the game is defined on connected graphs")
    budget = state_budget() if budget is None else budget
    est = estimate(g, k)
    if est["states"] > budget:
        raise BudgetExceeded(f"{est['states']} states exceed budget {budget}")
    limit = _available_memory() if max_bytes is None else max_bytes
    if est["bytes"] > limit:
        raise BudgetExceeded(f"estimated {est['bytes']} bytes exceed limit {limit}")

    n = g.n
    index = ConfigIndex(n, k)
    nb = _closed_neighborhoods(g)
    moves = _joint_moves(index, nb)
    # robber-side predecessor lists are closed neighborhoods (the relation is symmetric)
    deg1 = np.array([g.degree(v) + 1 for v in range(n)], dtype=np.int64)
    v_indptr = np.concatenate([[0], np.cumsum(deg1)])
    v_indices = np.concatenate([[v, *g.adjacency[v]] for v in range(n)]).astype(np.int64)

    size = index.count * n
    cop_time = np.full(size, UNRESOLVED, dtype=np.int32)
    robber_time = np.full(size, UNRESOLVED, dtype=np.int32)
    counter = np.tile(deg1.astype(np.int16), index.count)

    capture = np.zeros((index.count, n), dtype=bool)
    rows = np.arange(index.count)
    for i in range(k):
        capture[rows, index.configs[:, i]] = True
    frontier_c = np.flatnonzero(capture.ravel())
    frontier_r = frontier_c.copy()
    cop_time[frontier_c] = 0
    robber_time[frontier_r] = 0

    level = 0
    while frontier_c.size or frontier_r.size:
        nxt = level + 1
        new_c = []
        step = max(1, _CHUNK // max(1, int(np.diff(moves[0]).max())))
        for lo in range(0, frontier_r.size, step):
            chunk = frontier_r[lo : lo + step]
            cfg, rob = np.divmod(chunk, n)
            pred_cfg, src = _csr_expand(moves[0], moves[1], cfg)
            pred = pred_cfg * n + rob[src]
            pred = pred[cop_time[pred] == UNRESOLVED]
            if pred.size:
                pred = np.unique(pred)
                cop_time[pred] = nxt
                new_c.append(pred)
        new_r = []
        step = max(1, _CHUNK // int(deg1.max()))
        for lo in range(0, frontier_c.size, step):
            chunk = frontier_c[lo : lo + step]
            cfg, rob = np.divmod(chunk, n)
            pred_v, src = _csr_expand(v_indptr, v_indices, rob)
            pred = cfg[src] * n + pred_v
            pred = pred[robber_time[pred] == UNRESOLVED]
            if pred.size:
                uniq, hits = np.unique(pred, return_counts=True)
                counter[uniq] -= hits.astype(np.int16)
                done = uniq[counter[uniq] == 0]
                robber_time[done] = nxt
                new_r.append(done)
        frontier_c = np.concatenate(new_c) if new_c else np.empty(0, dtype=np.int64)
        frontier_r = np.concatenate(new_r) if new_r else np.empty(0, dtype=np.int64)
        level = nxt

    log.debug("solved n=%d k=%d in %d levels", n, k, level)
    return GameTable(
        graph=g,
        k=k,
        index=index,
        cop_time=cop_time.reshape(index.count, n),
        robber_time=robber_time.reshape(index.count, n),
        _moves=moves,
    )


def cop_number(g: Graph, k_max: int, budget: int | None = None) -> int | None:
    """Least k <= k_max with a winning cop placement, or None when it exceeds k_max."""
    for k in range(1, k_max + 1):
        if solve(g, k, budget=budget).cop_win:
            return k
    return None


# -- policies read off a solved table -----------------------------------------

_INF = np.iinfo(np.int64).max // 4


def _time_key(times: np.ndarray) -> np.ndarray:
    t = times.astype(np.int64)
    return np.where(t == UNRESOLVED, _INF, t)


class OptimalCops:
    """Cops that move to minimise the resulting capture time.

    Ties go to the lexicographically smallest joint move. With
    ``tiebreak="chase"`` ties are first broken by the total cop-robber
    distance, which keeps the cops pressing even from lost positions.
    ``seed`` switches the opening placement to a uniformly random one.
    """

    side = Side.COPS

    def __init__(self, table: GameTable, tiebreak: str = "lex", seed: int | None = None) -> None:
        if tiebreak not in ("lex", "chase"):
            raise ValueError(f"unknown tiebreak {tiebreak!r}")
        self.table = table
        self.tiebreak = tiebreak
        self.seed = seed
        g = table.graph
        self._dist = None
        if tiebreak == "chase":
            from .graph import all_pairs_distances

            self._dist = np.array(all_pairs_distances(g), dtype=np.int64)

    def place_cops(self, g: Graph) -> tuple[int, ...]:
        t = self.table
        if self.seed is not None:
            rng = np.random.default_rng(self.seed)
            return tuple(sorted(int(x) for x in rng.integers(0, g.n, size=t.k)))
        wins = t.winning_placements()
        if wins.size:
            worst = t.cop_time[wins].max(axis=1)
            best = wins[worst == worst.min()]
            return min(tuple(int(x) for x in t.index.configs[c]) for c in best)
        return tuple(int(x) for x in t.index.configs[t.index.rank([0] * t.k)])

    def place_robber(self, g: Graph, cops: tuple[int, ...]) -> int:
        raise TypeError("cop policy cannot place the robber")

    def candidates(self, g: Graph, cops: Sequence[int]) -> np.ndarray:
        """All joint moves, in lexicographic order, as a (moves, k) array."""
        hoods = [sorted((c, *g.adjacency[c])) for c in cops]
        return np.array(list(itertools.product(*hoods)), dtype=np.int64).reshape(-1, len(cops))

    def move(self, g: Graph, history: Sequence) -> tuple[int, ...]:
        cops, robber = history[-1]
        moves = self.candidates(g, cops)
        ranks = self.table.index.rank_array(np.sort(moves, axis=1))
        key = _time_key(self.table.robber_time[ranks, robber])
        if self._dist is None:
            best = int(np.argmin(key))
        else:
            spread = self._dist[moves, robber].sum(axis=1)
            # lexsort: last key is primary; position keeps lexicographic move order
            best = int(np.lexsort((np.arange(key.size), spread, key))[0])
        return tuple(int(x) for x in moves[best])


class OptimalRobber:
    """Robber that keeps to robber-win states, else maximises capture time (lowest id on ties)."""

    side = Side.ROBBER

    def __init__(self, table: GameTable) -> None:
        self.table = table

    def _best(self, cops: Sequence[int], options: Sequence[int]) -> int:
        rank = self.table.index.rank(cops)
        times = self.table.cop_time[rank, list(options)].astype(np.int64)
        key = np.where(times == UNRESOLVED, _INF, times)
        best = key.max()
        return min(v for v, k in zip(options, key) if k == best)

    def place_cops(self, g: Graph) -> tuple[int, ...]:
        raise TypeError("robber policy cannot place cops")

    def place_robber(self, g: Graph, cops: tuple[int, ...]) -> int:
        return self._best(cops, range(g.n))

    def move(self, g: Graph, history: Sequence) -> int:
        cops, robber = history[-1]
        return self._best(cops, (robber, *g.adjacency[robber]))


def optimal_policy(table: GameTable, side: Side, **kwargs):
    """Deterministic optimal play for ``side`` read off ``table``."""
    if side is Side.COPS:
        return OptimalCops(table, **kwargs)
    return OptimalRobber(table)
