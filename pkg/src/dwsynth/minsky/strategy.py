from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from dwsynth.logic.ast import Signature
from dwsynth.minsky.compiler import reduction_signature
from dwsynth.minsky.machine import MinskyMachine, Run, required_processes
from dwsynth.words.word import DataWord, Letter, Move, ProcessPools

NonHaltingRunError = type("NonHaltingRunError", (ValueError,), {})

ENV_PROCESS = "e"


def encode_plan(
    machine: MinskyMachine, names: Sequence[str], sys_process: str = "0"
) -> tuple[Letter, ...]:
    """System's letters for a sequence of transitions, without checking that the
    sequence is a run: `oks`, then `state transition upkeep oks` per transition,
    then the state reached.

    The k-th increment goes to process `k`; a decrement of counter i goes to the
    lowest process carrying `inc_i` and no `dec_i` (process `sys_process` if there
    is none); everything else is played on `sys_process`.

    Args:
        machine (MinskyMachine): the machine the transitions belong to.
        names (Sequence[str]): transition names, in order.
        sys_process (str): process of the states, transitions and `oks`.

    Returns:
        tuple[Letter, ...]: System's letters, `4 * len(names) + 2` of them.
    """
    plan = [Letter("oks", sys_process)]
    state = machine.init
    n_inc = 0
    open_incs: list[list[int]] = [[], []]
    for name in names:
        t = machine.transition(name)
        if t.kind == "inc":
            process = str(n_inc)
            open_incs[t.counter].append(n_inc)
            n_inc += 1
        elif t.kind == "dec" and open_incs[t.counter]:
            process = str(open_incs[t.counter].pop(0))
        else:
            process = sys_process
        plan += [
            Letter(t.source, sys_process),
            Letter(t.name, sys_process),
            Letter(t.upkeep, process),
            Letter("oks", sys_process),
        ]
        state = t.target
    plan.append(Letter(state, sys_process))
    return tuple(plan)


@dataclass(frozen=True)
class RunStrategy:
    """Plays a precomputed plan pattern by pattern, waiting for an `oke` after
    each `oks`.

    Answers a second `oke` since its last `oks` with `kos`, and stops for good
    once a ko was played or if Environment moved first.
    """

    plan: tuple[Letter, ...]
    sig: Signature
    sys_process: str = "0"

    @property
    def processes(self) -> tuple[str, ...]:
        return tuple(sorted({letter.process for letter in self.plan}, key=_process_key))

    def __call__(self, history: DataWord) -> Move:
        actions = history.actions()
        if "koe" in actions or "kos" in actions:
            return None
        if actions and actions[0] in self.sig.env_actions:
            return None
        last_oks = max((i for i, a in enumerate(actions) if a == "oks"), default=-1)
        if last_oks >= 0 and actions[last_oks + 1 :].count("oke") >= 2:
            return Letter("kos", self.sys_process)

        sys_positions = [i for i, a in enumerate(actions) if a in self.sig.sys_actions]
        n = len(sys_positions)
        if n >= len(self.plan):
            return None
        if n > 0 and self.plan[n - 1].action == "oks":
            if "oke" not in actions[sys_positions[-1] + 1 :]:
                return None
        return self.plan[n]


def _process_key(process: str):
    return (0, int(process), "") if process.isdigit() else (1, 0, process)


def strategy_from_run(machine: MinskyMachine, halting_run: Run) -> RunStrategy:
    """The honest System strategy for a halting run.

    Args:
        machine (MinskyMachine): the machine.
        halting_run (Run): a run of `machine` ending in its halting state.

    Returns:
        RunStrategy: plays the run's patterns, `kos` on a second `oke`.

    Raises:
        NonHaltingRunError: the run does not end in the halting state.
    """
    if not halting_run.halting:
        raise NonHaltingRunError(f"the run ends in {halting_run.final}, not in {machine.halt}")
    return RunStrategy(encode_plan(machine, halting_run.names), reduction_signature(machine))


def reduction_pools(n_sys: int, extra: Optional[Sequence[str]] = None) -> ProcessPools:
    "System processes `0 .. n_sys-1` (plus `extra`) and the Environment process `e`."
    return ProcessPools.of(
        [str(i) for i in range(n_sys)] + list(extra or ()), [ENV_PROCESS]
    )


def pools_for_run(halting_run: Run) -> ProcessPools:
    return reduction_pools(required_processes(halting_run))
