"Sample machines."

from __future__ import annotations

import numpy as np

from dwsynth.minsky.machine import MinskyMachine, Transition

# Halting run of the countdown machine, final configuration (h,0,0).
COUNTDOWN_RUN = ("t0", "t0", "t1", "t2", "t3")
# Not a run: the zero test fires while c0 = 1.
ZERO_TEST_CHEAT_RUN = ("t0", "t0", "t0", "t1", "t2", "t3")


def countdown_machine() -> MinskyMachine:
    "Counts c0 up, then down twice, then tests it for zero."
    return MinskyMachine.of(
        ("i", "q1", "q2", "h"),
        "i",
        "h",
        [
            ("t0", "i", "i", "inc", 0),
            ("t1", "i", "q1", "dec", 0),
            ("t2", "q1", "q2", "dec", 0),
            ("t3", "q2", "h", "zero", 0),
        ],
    )


def looping_machine() -> MinskyMachine:
    "Increments forever; the halting state is unreachable."
    return MinskyMachine.of(("i", "h"), "i", "h", [("t", "i", "i", "inc", 0)])


def random_machine(
    rng: np.random.Generator, n_states: int = 3, n_transitions: int = 4
) -> MinskyMachine:
    assert n_states >= 2, "a machine needs distinct initial and halting states"
    states = tuple(f"s{k}" for k in range(n_states - 1)) + ("h",)
    kinds = ("inc", "dec", "zero")
    transitions = tuple(
        Transition(
            f"r{k}",
            str(rng.choice(states[:-1])),
            str(rng.choice(states)),
            kinds[int(rng.integers(3))],
            int(rng.integers(2)),
        )
        for k in range(n_transitions)
    )
    return MinskyMachine(states, states[0], "h", transitions)
