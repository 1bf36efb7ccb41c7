"Sample games."

from __future__ import annotations

import itertools

import numpy as np

from dwsynth.games.spec import AcceptanceCondition, Constraint, GameSpec

THRESHOLD = GameSpec.of(
    ["a"], ["c"], 0, [AcceptanceCondition.of(env={(0,): Constraint(">=", 1)})]
)

# System wins iff it holds a pebble on <1> and no Environment pebble is on <1>.
GUARDED_STEP = GameSpec.of(
    ["a"],
    ["c"],
    1,
    [AcceptanceCondition.of(sys={(1,): Constraint(">=", 1)}, env={(1,): Constraint("=", 0)})],
)


def random_game(
    rng: np.random.Generator,
    max_env_letters: int = 2,
    max_bound: int = 1,
    max_constant: int = 1,
    max_conditions: int = 2,
) -> GameSpec:
    "One System letter, up to `max_env_letters` Environment letters, up to two constraints per player and condition."
    d = int(rng.integers(1, max_env_letters + 1))
    bound = int(rng.integers(0, max_bound + 1))
    env_locations = list(itertools.product(range(bound + 1), repeat=d))
    sys_locations = [(v,) for v in range(bound + 1)]

    def constraints(locations):
        picked = rng.permutation(len(locations))[: int(rng.integers(0, 3))]
        return {
            locations[i]: Constraint(
                "=" if rng.random() < 0.5 else ">=", int(rng.integers(0, max_constant + 1))
            )
            for i in picked
        }

    victory = [
        AcceptanceCondition.of(sys=constraints(sys_locations), env=constraints(env_locations))
        for _ in range(int(rng.integers(1, max_conditions + 1)))
    ]
    return GameSpec.of(["a"], [f"c{i}" for i in range(d)], bound, victory)
