from __future__ import annotations

import sys
from typing import Callable, Mapping, Optional, Sequence

import numpy as np

from dwsynth.arena.base import EnvironmentPolicy
from dwsynth.minsky.compiler import OrderCompiler
from dwsynth.minsky.machine import MinskyMachine
from dwsynth.minsky.strategy import ENV_PROCESS
from dwsynth.words.evaluator import evaluate
from dwsynth.words.structure import WordStructure
from dwsynth.words.word import DataWord, Letter, Move, ProcessPools

UnknownPolicyError = type("UnknownPolicyError", (ValueError,), {})


class BlockerPolicy(EnvironmentPolicy):
    name = "blocker"

    def __call__(self, history: DataWord) -> Move:
        return None


class ScriptedPolicy(EnvironmentPolicy):
    "Plays `script[len(history)]` when there is such an entry, ε otherwise."

    def __init__(self, script: Mapping[int, Letter], name: str = "scripted"):
        self.script = dict(script)
        self.name = name

    def __call__(self, history: DataWord) -> Move:
        return self.script.get(len(history))


class RandomPolicy(EnvironmentPolicy):
    """Passes or acknowledges with an `oke`, drawn from a generator seeded by the
    seed and the length of the history."""

    def __init__(self, seed: int, process: str = ENV_PROCESS, pass_probability: float = 0.5):
        self.seed = seed
        self.process = process
        self.pass_probability = pass_probability
        self.name = f"random:{seed}"

    def __call__(self, history: DataWord) -> Move:
        rng = np.random.default_rng([self.seed, len(history)])
        if rng.random() < self.pass_probability:
            return None
        return Letter("oke", self.process)


class CompliantPolicy(EnvironmentPolicy):
    """Acknowledges each `oks` of System with an `oke`, unless System cheated
    since the last `oke`, in which case it plays `koe` once and stops."""

    name = "compliant"

    def __init__(
        self,
        machine: MinskyMachine,
        pools: ProcessPools,
        process: str = ENV_PROCESS,
        literal: bool = False,
    ):
        self.machine = machine
        self.pools = pools
        self.process = process
        self.koe_justified = OrderCompiler(literal).compile(machine).koe_justified

    def cheated(self, history: DataWord) -> bool:
        return evaluate(self.koe_justified, WordStructure(history, self.pools))

    def __call__(self, history: DataWord) -> Move:
        actions = history.actions()
        if "koe" in actions:
            return None
        if self.cheated(history):
            return Letter("koe", self.process)
        if actions and actions[-1] == "oks":
            return Letter("oke", self.process)
        return None


class ManualPolicy(EnvironmentPolicy):
    "Reads Environment moves (`action@process`, empty for ε) from a line reader."

    name = "manual"

    def __init__(self, read_line: Optional[Callable[[str], str]] = None):
        self.read_line = read_line or _stdin_line

    def __call__(self, history: DataWord) -> Move:
        while True:
            text = self.read_line(f"[{len(history)}] {history} > ").strip()
            if not text:
                return None
            try:
                return Letter.parse(text)
            except ValueError as e:
                print(e, file=sys.stderr)


def _stdin_line(prompt: str) -> str:
    print(prompt, end="", file=sys.stderr, flush=True)
    return sys.stdin.readline()


def double_oke_policy(process: str = ENV_PROCESS) -> ScriptedPolicy:
    "Two `oke` in a row after System's first `oks`."
    oke = Letter("oke", process)
    return ScriptedPolicy({1: oke, 2: oke}, "double-oke")


def premature_oke_policy(process: str = ENV_PROCESS) -> ScriptedPolicy:
    "Acknowledges the first `oks`, then plays `oke` in the middle of a pattern."
    oke = Letter("oke", process)
    return ScriptedPolicy({1: oke, 3: oke}, "premature-oke")


def oke_after_ko_policy(process: str = ENV_PROCESS) -> ScriptedPolicy:
    "Provokes a `kos` with two `oke`, then keeps playing."
    oke = Letter("oke", process)
    return ScriptedPolicy({1: oke, 2: oke, 4: oke}, "oke-after-ko")


def early_koe_policy(process: str = ENV_PROCESS) -> ScriptedPolicy:
    "Answers System's first `oks` with a `koe`."
    return ScriptedPolicy({1: Letter("koe", process)}, "early-koe")


def compliant_env_policy(machine: MinskyMachine, pools: ProcessPools) -> CompliantPolicy:
    return CompliantPolicy(machine, pools)


def policy_suite(
    machine: MinskyMachine, pools: ProcessPools, seeds: Sequence[int] = range(20)
) -> list[EnvironmentPolicy]:
    "compliant, blocker, premature-oke, oke-after-ko and one random policy per seed."
    return [
        CompliantPolicy(machine, pools),
        BlockerPolicy(),
        premature_oke_policy(),
        oke_after_ko_policy(),
    ] + [RandomPolicy(seed) for seed in seeds]


def parse_script(text: str) -> dict[int, Letter]:
    "`1=oke@e,3=oke@e`: history lengths and the letter to play there."
    script = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        index, sep, letter = item.partition("=")
        if not sep or not index.strip().isdigit():
            raise UnknownPolicyError(f"expected N=action@process, got {item!r}")
        script[int(index)] = Letter.parse(letter)
    return script


def make_policy(
    text: str, machine: MinskyMachine, pools: ProcessPools, literal: bool = False
) -> EnvironmentPolicy:
    """Builds a policy from its command line name: `compliant`, `blocker`,
    `premature-oke`, `oke-after-ko`, `double-oke`, `early-koe`, `manual`,
    `script:1=oke@e,...` or `random:SEED`."""
    kind, _, argument = text.partition(":")
    match kind:
        case "compliant":
            return CompliantPolicy(machine, pools, literal=literal)
        case "blocker":
            return BlockerPolicy()
        case "premature-oke":
            return premature_oke_policy()
        case "oke-after-ko":
            return oke_after_ko_policy()
        case "double-oke":
            return double_oke_policy()
        case "early-koe":
            return early_koe_policy()
        case "manual":
            return ManualPolicy()
        case "script":
            return ScriptedPolicy(parse_script(argument), text)
        case "random":
            try:
                return RandomPolicy(int(argument))
            except ValueError:
                raise UnknownPolicyError(f"random needs an integer seed, got {argument!r}")
    raise UnknownPolicyError(f"unknown policy {text!r}")
