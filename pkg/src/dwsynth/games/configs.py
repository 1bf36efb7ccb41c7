from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from dwsynth.games.lattice import LocationLattice
from dwsynth.games.spec import AcceptanceCondition, GameSpec, Location, Player

# Sorted (location, count) pairs with positive counts.
PlayerConfig = tuple[tuple[Location, int], ...]


class SolverBudgetError(RuntimeError):
    "A resource limit of the solver was hit; the answer is unknown, never wrong."


def make_config(pebbles: Mapping[Location, int] | Iterable[Location]) -> PlayerConfig:
    "Canonical form of a distribution of pebbles, given as counts or as a list of locations."
    if isinstance(pebbles, Mapping):
        counts = Counter({tuple(l): n for l, n in pebbles.items()})
    else:
        counts = Counter(tuple(l) for l in pebbles)
    assert all(n >= 0 for n in counts.values()), "pebble counts must be nonnegative"
    return tuple(sorted((l, n) for l, n in counts.items() if n > 0))


def initial_config(spec: GameSpec, player: Player, n: int) -> PlayerConfig:
    return make_config({spec.origin(player): n})


def count_at(conf: PlayerConfig, loc: Location) -> int:
    for l, n in conf:
        if l == loc:
            return n
    return 0


def total(conf: PlayerConfig) -> int:
    return sum(n for _, n in conf)


def as_dict(conf: PlayerConfig) -> dict[Location, int]:
    return dict(conf)


def add_pebble(conf: PlayerConfig, loc: Location, n: int = 1) -> PlayerConfig:
    counts = as_dict(conf)
    counts[loc] = counts.get(loc, 0) + n
    return make_config(counts)


def format_config(conf: PlayerConfig) -> str:
    if not conf:
        return "{}"
    return "{" + ", ".join(f"<{','.join(map(str, l))}>:{n}" for l, n in conf) + "}"


@dataclass(frozen=True)
class GameState:
    conf_sys: PlayerConfig
    conf_env: PlayerConfig
    turn: Player = "E"
    last_was_pass: bool = False

    def conf(self, player: Player) -> PlayerConfig:
        return self.conf_sys if player == "S" else self.conf_env

    def after(self, move: PlayerConfig) -> GameState:
        "The state after the player to move picks `move`; the turn passes."
        passed = move == self.conf(self.turn)
        if self.turn == "S":
            return GameState(move, self.conf_env, "E", passed)
        return GameState(self.conf_sys, move, "S", passed)

    def __str__(self) -> str:
        return (
            f"S={format_config(self.conf_sys)} E={format_config(self.conf_env)} "
            f"turn={self.turn}{' (after pass)' if self.last_was_pass else ''}"
        )


def initial_state(spec: GameSpec, n_sys: int, n_env: int) -> GameState:
    "All pebbles on the origins, Environment to move."
    return GameState(initial_config(spec, "S", n_sys), initial_config(spec, "E", n_env))


def enumerate_moves(
    conf: PlayerConfig,
    spec: GameSpec,
    player: Player,
    move_budget: Optional[int] = None,
) -> list[PlayerConfig]:
    """Every configuration reachable in one move: each pebble stays or moves to a
    reachable location. The pass move (`conf` itself) comes first, the others in
    sorted order.

    Raises:
        SolverBudgetError: more than `move_budget` moves.
    """
    lattice = LocationLattice(spec.dim(player), spec.bound)
    per_source = [
        list(itertools.combinations_with_replacement(lattice.up(loc), n))
        for loc, n in conf
    ]
    moves: set[PlayerConfig] = set()
    for choice in itertools.product(*per_source):
        moves.add(make_config(itertools.chain.from_iterable(choice)))
        if move_budget is not None and len(moves) > move_budget:
            raise SolverBudgetError(f"more than {move_budget} moves from {format_config(conf)}")
    moves.discard(conf)
    return [conf] + sorted(moves)


def condition_holds(
    condition: AcceptanceCondition, conf_sys: PlayerConfig, conf_env: PlayerConfig
) -> bool:
    return all(
        c.holds(count_at(conf_sys, loc)) for loc, c in condition.sys_constraints
    ) and all(c.holds(count_at(conf_env, loc)) for loc, c in condition.env_constraints)


def config_satisfies(
    conf_sys: PlayerConfig,
    conf_env: PlayerConfig,
    victory: Iterable[AcceptanceCondition],
) -> bool:
    "Whether the configuration satisfies one of the acceptance conditions."
    return any(condition_holds(c, conf_sys, conf_env) for c in victory)


def total_potential(conf: PlayerConfig, lattice: LocationLattice) -> int:
    return sum(n * lattice.potential(loc) for loc, n in conf)
