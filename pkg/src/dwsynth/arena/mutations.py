"""Seeded cheats for the Minsky reduction.

Each System cheat replaces one letter of the honest plan (or plays the plan of a
sequence that is not a run); each Environment cheat is a scripted policy against
the honest strategy. A case names the part of the specification that must catch
it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from dwsynth.arena.base import EnvironmentPolicy, SystemStrategy
from dwsynth.arena.policies import (
    CompliantPolicy,
    double_oke_policy,
    early_koe_policy,
    premature_oke_policy,
)
from dwsynth.minsky.machine import MinskyMachine, Run, required_processes
from dwsynth.minsky.strategy import (
    RunStrategy,
    encode_plan,
    reduction_pools,
    strategy_from_run,
)
from dwsynth.words.word import DataWord, Letter, Move, ProcessPools


@dataclass(frozen=True)
class SubstitutedStrategy:
    "Plays `letter` instead of the base strategy's `index`-th System letter."

    base: SystemStrategy
    index: int
    letter: Letter
    sys_actions: frozenset[str]

    def __call__(self, history: DataWord) -> Move:
        move = self.base(history)
        if move is None:
            return None
        played = sum(a in self.sys_actions for a in history.actions())
        return self.letter if played == self.index else move


@dataclass
class CheatCase:
    name: str
    description: str
    strategy: SystemStrategy
    policy: EnvironmentPolicy
    pools: ProcessPools
    detector: str  # field of ReductionFormulas that catches the cheat


def _pattern_index(k: int, j: int) -> int:
    "Plan index of letter j (0 state, 1 transition, 2 upkeep, 3 oks) of pattern k."
    return 1 + 4 * k + j


def system_cheat_cases(
    machine: MinskyMachine,
    halting_run: Run,
    zero_test_names: Optional[Sequence[str]] = None,
) -> list[CheatCase]:
    """One case per System cheat that the run allows seeding, all played against
    the compliant policy. `zero_test_names` is a transition sequence whose zero
    test fires on a non-zero counter; the zero test case is skipped without it."""
    honest = strategy_from_run(machine, halting_run)
    sig = honest.sig
    plan = honest.plan
    n_sys = required_processes(halting_run)
    pools = reduction_pools(n_sys)
    transitions = halting_run.transitions
    cases: list[CheatCase] = []

    def substituted(index: int, letter: Letter, case_pools: ProcessPools = pools):
        return SubstitutedStrategy(honest, index, letter, sig.sys_actions), case_pools

    def add(name: str, description: str, detector: str, strategy, case_pools: ProcessPools):
        policy = CompliantPolicy(machine, case_pools)
        cases.append(CheatCase(name, description, strategy, policy, case_pools, detector))

    add(
        "S1", "starts with a state instead of oks", "sys_prefix",
        *substituted(0, Letter(machine.init, "0")),
    )
    if transitions:
        add(
            "S2", "plays the state twice in a pattern", "bad_sequence",
            *substituted(_pattern_index(0, 1), plan[_pattern_index(0, 0)]),
        )
        wrong_source = [t for t in machine.transitions if t.source != transitions[0].source]
        if wrong_source:
            add(
                "S4", "plays a transition that does not start in the state", "bad_source",
                *substituted(_pattern_index(0, 1), Letter(wrong_source[0].name, "0")),
            )
        expected = transitions[0].upkeep
        add(
            "S5", "plays an upkeep that does not match the transition", "bad_upkeep",
            *substituted(
                _pattern_index(0, 2), Letter("inc0" if expected == "noop" else "noop", "0")
            ),
        )
    if len(transitions) >= 2:
        target = transitions[0].target
        wrong_states = [q for q in machine.states if q != target]
        add(
            "S3", "plays a state that is not the target of the last transition", "bad_target",
            *substituted(_pattern_index(1, 0), Letter(wrong_states[0], "0")),
        )

    incs = [k for k, t in enumerate(transitions) if t.kind == "inc"]
    for i in (0, 1):
        incs_i = [k for k in incs if transitions[k].counter == i]
        decs_i = [k for k, t in enumerate(transitions) if t.kind == "dec" and t.counter == i]
        if len(incs_i) >= 2:
            first = plan[_pattern_index(incs_i[0], 2)]
            add(
                "S6", f"plays inc{i} twice on process {first.process}", "bad_upkeep",
                *substituted(_pattern_index(incs_i[1], 2), first),
            )
        if len(decs_i) >= 2:
            first = plan[_pattern_index(decs_i[0], 2)]
            add(
                "S7", f"plays dec{i} twice on process {first.process}", "bad_upkeep",
                *substituted(_pattern_index(decs_i[1], 2), first),
            )
        if decs_i:
            fresh = str(n_sys)
            add(
                "S8", f"plays dec{i} on a process without inc{i}", "bad_upkeep",
                *substituted(
                    _pattern_index(decs_i[0], 2),
                    Letter(f"dec{i}", fresh),
                    reduction_pools(n_sys, [fresh]),
                ),
            )

    if zero_test_names is not None:
        n_inc = sum(machine.transition(n).kind == "inc" for n in zero_test_names)
        cheat_pools = reduction_pools(max(1, n_inc))
        strategy = RunStrategy(encode_plan(machine, zero_test_names), sig)
        add("S9", "zero test on a non-zero counter", "bad_zero_test", strategy, cheat_pools)

    # Cases come out in cheat order whatever the run allowed.
    unique = {}
    for case in cases:
        unique.setdefault(case.name, case)
    return [unique[name] for name in sorted(unique, key=lambda n: int(n[1:]))]


def env_cheat_cases(machine: MinskyMachine, halting_run: Run) -> list[CheatCase]:
    "The three Environment cheats against the honest strategy."
    honest = strategy_from_run(machine, halting_run)
    pools = reduction_pools(required_processes(halting_run))
    cases = (
        ("E1", "answers the first oks with koe", early_koe_policy(), "env_prefix"),
        ("E2", "plays oke twice in a row", double_oke_policy(), "kos_justified"),
        ("E3", "plays oke before System's oks", premature_oke_policy(), "kos_justified"),
    )
    return [
        CheatCase(name, description, honest, policy, pools, detector)
        for name, description, policy, detector in cases
    ]


def cheat_cases(
    machine: MinskyMachine,
    halting_run: Run,
    zero_test_names: Optional[Sequence[str]] = None,
) -> list[CheatCase]:
    return system_cheat_cases(machine, halting_run, zero_test_names) + env_cheat_cases(
        machine, halting_run
    )
