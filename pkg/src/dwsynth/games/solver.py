"""Exact solving of vector games by memoized minimax.

Plays start with Environment; players alternate, each move redistributing the
mover's pebbles upwards, and a play ends at the first point where both players
pass in a row. The final configuration decides the winner.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Hashable, Optional

from simple_parsing.helpers import JsonSerializable

from dwsynth.games.configs import (
    GameState,
    PlayerConfig,
    SolverBudgetError,
    config_satisfies,
    enumerate_moves,
    initial_state,
    total_potential,
)
from dwsynth.games.lattice import LocationLattice
from dwsynth.games.spec import GameSpec, Player, opponent


@dataclass
class SolverConfig(JsonSerializable):
    budget: int = 10**7  # maximum number of memoized states
    move_budget: int = 10**6  # maximum number of moves from a single configuration


class GameSolver:
    """A minimax oracle for one game instance, keeping its memo across queries."""

    def __init__(self, spec: GameSpec, config: Optional[SolverConfig] = None):
        self.spec = spec
        self.config = config or SolverConfig()
        self._table: dict[GameState, Player] = {}
        self._best: dict[GameState, PlayerConfig] = {}

    def __len__(self) -> int:
        return len(self._table)

    def final_winner(self, state: GameState) -> Player:
        return "S" if config_satisfies(state.conf_sys, state.conf_env, self.spec.victory) else "E"

    def winner(self, state: GameState) -> Player:
        "Winner of the play from `state` under optimal play."
        if state in self._table:
            return self._table[state]
        if len(self._table) >= self.config.budget:
            raise SolverBudgetError(f"more than {self.config.budget} states")

        player = state.turn
        moves = enumerate_moves(
            state.conf(player), self.spec, player, self.config.move_budget
        )
        result, best = opponent(player), moves[0]
        for move in moves:
            child = state.after(move)
            if child.last_was_pass and state.last_was_pass:
                outcome = self.final_winner(child)
            else:
                outcome = self.winner(child)
            if outcome == player:
                result, best = player, move
                break
        self._table[state] = result
        self._best[state] = best
        return result

    def best_move(self, state: GameState) -> PlayerConfig:
        "An optimal move of the player to move; the pass when the player loses anyway."
        if state not in self._best:
            self.winner(state)
        return self._best[state]


@dataclass
class Solution:
    spec: GameSpec
    n_sys: int
    n_env: int
    winner: Player
    solver: GameSolver = field(repr=False)

    @property
    def initial(self) -> GameState:
        return initial_state(self.spec, self.n_sys, self.n_env)

    @property
    def table(self) -> dict[GameState, PlayerConfig]:
        "Optimal moves of every state solved so far."
        return dict(self.solver._best)

    def strategy(self, player: Player) -> TableStrategy:
        return TableStrategy(self.solver, player)


def solve(
    spec: GameSpec, n_sys: int, n_env: int, config: Optional[SolverConfig] = None
) -> Solution:
    """Solves the game with `n_sys` System and `n_env` Environment pebbles.

    Raises:
        SolverBudgetError: the state space exceeds the configured budget.
    """
    assert n_sys >= 0 and n_env >= 0, "pebble numbers must be nonnegative"
    solver = GameSolver(spec, config)
    winner = solver.winner(initial_state(spec, n_sys, n_env))
    return Solution(spec, n_sys, n_env, winner, solver)


class GameStrategy(ABC):
    """A strategy of one player, possibly with memory. Memories must be hashable."""

    player: Player

    def initial_memory(self) -> Hashable:
        return None

    @abstractmethod
    def move(self, state: GameState, memory: Any) -> tuple[PlayerConfig, Hashable]:
        "Returns the next configuration of the player and the updated memory."
        pass


class TableStrategy(GameStrategy):
    "Plays the solver's optimal moves, solving unseen states on demand."

    def __init__(self, solver: GameSolver, player: Player):
        self.solver = solver
        self.player = player

    def move(self, state: GameState, memory: Any) -> tuple[PlayerConfig, Hashable]:
        assert state.turn == self.player, "not this strategy's turn"
        return self.solver.best_move(state), memory


@dataclass
class PlayResult:
    final: GameState
    moves: list[tuple[Player, PlayerConfig]]
    winner: Player

    @property
    def n_non_pass(self) -> int:
        return sum(1 for _, move in self.moves if move is not None)


def play_game(
    spec: GameSpec,
    sys_strategy: GameStrategy,
    env_strategy: GameStrategy,
    n_sys: int,
    n_env: int,
) -> PlayResult:
    """Plays the two strategies against each other until a double pass.
    Each recorded move is the new configuration, or None for a pass."""
    lattices = {p: LocationLattice(spec.dim(p), spec.bound) for p in ("S", "E")}
    strategies = {"S": sys_strategy, "E": env_strategy}
    memories = {p: s.initial_memory() for p, s in strategies.items()}
    state = initial_state(spec, n_sys, n_env)
    moves: list[tuple[Player, Any]] = []
    while True:
        player = state.turn
        current = state.conf(player)
        move, memories[player] = strategies[player].move(state, memories[player])
        lattice = lattices[player]
        if move != current:
            assert total_potential(move, lattice) < total_potential(
                current, lattice
            ), "a move must decrease the mover's potential"
        child = state.after(move)
        moves.append((player, None if child.last_was_pass else move))
        if child.last_was_pass and state.last_was_pass:
            state = child
            break
        state = child
    winner: Player = (
        "S" if config_satisfies(state.conf_sys, state.conf_env, spec.victory) else "E"
    )
    return PlayResult(state, moves, winner)


def env_strategy_wins(
    spec: GameSpec,
    n_sys: int,
    n_env: int,
    env_strategy: GameStrategy,
    budget: int = 10**6,
) -> bool:
    """Whether `env_strategy` wins against every System strategy, by exhaustive
    search over System's moves.

    Raises:
        SolverBudgetError: more than `budget` (state, memory) pairs.
    """
    memo: dict[tuple[GameState, Hashable], bool] = {}
    solver = GameSolver(spec)

    def wins(state: GameState, memory: Hashable) -> bool:
        key = (state, memory)
        if key in memo:
            return memo[key]
        if len(memo) >= budget:
            raise SolverBudgetError(f"more than {budget} states")
        if state.turn == "E":
            move, next_memory = env_strategy.move(state, memory)
            options = [(move, next_memory)]
        else:
            options = [(m, memory) for m in enumerate_moves(state.conf_sys, spec, "S")]
        results = []
        for move, next_memory in options:
            child = state.after(move)
            if child.last_was_pass and state.last_was_pass:
                results.append(solver.final_winner(child) == "E")
            else:
                results.append(wins(child, next_memory))
            if not results[-1]:
                break
        memo[key] = all(results)
        return memo[key]

    return wins(initial_state(spec, n_sys, n_env), env_strategy.initial_memory())
