"""Adding an Environment pebble above the threshold never helps System.

Once Environment has at least `minind = K·(d+1)^(d·B)` pebbles, it can place one
more pebble on a marked location carrying at least K of its other pebbles, and
keep that mark on such a location for the whole play. Constraints of the victory
condition cannot tell K pebbles from K+1 there, so a winning Environment
strategy stays winning with the extra pebble.
"""

from __future__ import annotations

import math
from typing import Any, Hashable, Optional

import numpy as np

from dwsynth.games.configs import GameState, PlayerConfig, add_pebble, as_dict, count_at
from dwsynth.games.lattice import lattice_of
from dwsynth.games.solver import GameStrategy
from dwsynth.games.spec import GameSpec, Location

AnchorError = type("AnchorError", (ValueError,), {})
LiftError = type("LiftError", (ValueError,), {})

INT64_MAX = int(np.iinfo(np.int64).max)


def potential(loc: Location, spec: GameSpec) -> int:
    "Σ (B − ν_i): the number of unit moves left to an Environment pebble at `loc`."
    return sum(spec.bound - v for v in loc)


def compute_minind(spec: GameSpec) -> int:
    """K·(d+1)^(d·B) with d the number of Environment letters and K the largest
    constant of the victory condition.

    Raises:
        OverflowError: the value does not fit a signed 64 bit integer.
    """
    d, exponent = spec.d, spec.d * spec.bound
    if spec.K > 0 and math.log2(spec.K) + exponent * math.log2(d + 1) > 64:
        raise OverflowError(f"minind = {spec.K}·{d + 1}^{exponent} exceeds int64")
    value = spec.K * (d + 1) ** exponent
    if value > INT64_MAX:
        raise OverflowError(f"minind = {spec.K}·{d + 1}^{exponent} exceeds int64")
    return value


def num_after(conf_env: PlayerConfig, loc: Location) -> int:
    "Number of pebbles on locations reachable from `loc`."
    return sum(n for l, n in conf_env if all(a >= b for a, b in zip(l, loc)))


def upward_counts(conf_env: PlayerConfig, spec: GameSpec) -> dict[Location, int]:
    "`num_after` of every Environment location at once."
    lattice = lattice_of(spec.d, spec.bound)
    sums = lattice.upward_sums(as_dict(conf_env)).tolist()
    return dict(zip(lattice.locations(), sums))


def holds_P(conf_env: PlayerConfig, loc: Location, K: int, spec: GameSpec) -> bool:
    "num_after(loc) ≥ K·(d+1)^potential(loc)"
    lattice = lattice_of(spec.d, spec.bound)
    return bool(lattice.p_mask(as_dict(conf_env), K)[lattice.index(loc)])


def find_anchor(
    conf_env: PlayerConfig, K: int, spec: GameSpec, start: Optional[Location] = None
) -> Location:
    """A location reachable from `start` (the origin by default) that satisfies P
    and holds at least K pebbles, found by walking up unit successors that
    satisfy P.

    Args:
        conf_env: the Environment configuration.
        K: the largest constant of the victory condition.
        spec: the game.
        start: where the walk starts.

    Returns:
        Location: the anchor.

    Raises:
        AnchorError: P does not hold at `start`.
    """
    lattice = lattice_of(spec.d, spec.bound)
    mask = lattice.p_mask(as_dict(conf_env), K).tolist()
    loc = lattice.origin if start is None else start
    if not mask[lattice.index(loc)]:
        raise AnchorError(f"P does not hold at {loc}")
    while count_at(conf_env, loc) < K:
        for succ in lattice.successors(loc):
            if mask[lattice.index(succ)]:
                loc = succ
                break
        else:
            raise AssertionError(f"P holds at {loc} but at none of its successors")
    return loc


def remove_pebble(conf: PlayerConfig, loc: Location) -> PlayerConfig:
    assert count_at(conf, loc) > 0, f"no pebble at {loc}"
    return add_pebble(conf, loc, -1)


class LiftedEnvStrategy(GameStrategy):
    """Environment strategy for `n_env + 1` pebbles built from one for `n_env`.

    The memory is the marked location together with the memory of the base
    strategy. The extra pebble always lies on the mark; the base strategy plays
    the other pebbles.
    """

    player = "E"

    def __init__(self, spec: GameSpec, base: GameStrategy, n_env: int):
        self.spec = spec
        self.base = base
        self.n_env = n_env

    def initial_memory(self) -> Hashable:
        return (lattice_of(self.spec.d, self.spec.bound).origin, self.base.initial_memory())

    def base_state(self, state: GameState, mark: Location) -> GameState:
        return GameState(
            state.conf_sys, remove_pebble(state.conf_env, mark), state.turn, state.last_was_pass
        )

    def move(self, state: GameState, memory: Any) -> tuple[PlayerConfig, Hashable]:
        mark, base_memory = memory
        base_move, base_memory = self.base.move(self.base_state(state, mark), base_memory)
        # Base pebbles only move upwards, so P keeps holding at the old mark.
        new_mark = find_anchor(base_move, self.spec.K, self.spec, start=mark)
        return add_pebble(base_move, new_mark), (new_mark, base_memory)


def lift_env_strategy(
    spec: GameSpec, n_sys: int, n_env: int, env_strategy: GameStrategy
) -> LiftedEnvStrategy:
    """Lifts an Environment strategy for (n_sys, n_env) to (n_sys, n_env + 1).

    Raises:
        LiftError: `n_env` is below `compute_minind(spec)`.
    """
    minind = compute_minind(spec)
    if n_env < minind:
        raise LiftError(f"{n_env} Environment pebbles is below minind = {minind}")
    return LiftedEnvStrategy(spec, env_strategy, n_env)
