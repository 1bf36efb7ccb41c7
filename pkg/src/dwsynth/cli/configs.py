from dataclasses import dataclass
from typing import Optional

from simple_parsing import field
from simple_parsing.helpers import JsonSerializable

from dwsynth.arena.scheduler import ScheduleConfig, default_max_rounds
from dwsynth.games.solver import SolverConfig
from dwsynth.logic import Signature, parse_signature


@dataclass
class CheckConfig(JsonSerializable):
    # comma separated variables that may occur free
    free: str = ""


@dataclass
class EvalConfig(JsonSerializable):
    # `x=3,y=0`: element indices (positions first, then processes) of free variables
    assign: str = ""
    oracle: bool = False  # also evaluate on the grounded formula and compare
    # `S={a,b} E={c}`: signature for formula files without a `sig` header
    sig: str = ""

    def signature(self) -> Optional[Signature]:
        if not self.sig.strip():
            return None
        text = self.sig.strip()
        return parse_signature(text if text.startswith("sig") else f"sig {text}")

    def env(self) -> dict[str, int]:
        env = {}
        for item in filter(None, (part.strip() for part in self.assign.split(","))):
            var, sep, position = item.partition("=")
            if not sep or not position.strip().isdigit():
                raise ValueError(f"expected VAR=POSITION, got {item!r}")
            env[var.strip()] = int(position)
        return env


@dataclass
class SolveConfig(JsonSerializable):
    ns: int = 0
    ne: int = 0
    budget: int = 10**7
    move_budget: int = 10**6

    def parse(self) -> SolverConfig:
        return SolverConfig(budget=self.budget, move_budget=self.move_budget)


@dataclass
class GridConfig(JsonSerializable):
    cut: int = 3
    minind: Optional[int] = None
    jobs: int = 1
    tsv: bool = False
    # when positive, also look for a stable cut over this many columns
    probe: int = 0
    budget: int = 10**6
    move_budget: int = 10**5

    def parse(self) -> SolverConfig:
        return SolverConfig(budget=self.budget, move_budget=self.move_budget)


@dataclass
class LiftCheckConfig(JsonSerializable):
    ns: int = 0
    ne: int = 0
    budget: int = 10**6


@dataclass
class RunConfig(JsonSerializable):
    # comma separated transition names; searched for when empty
    trans: str = ""
    max_steps: int = 64

    def names(self) -> list[str]:
        return [name.strip() for name in self.trans.split(",") if name.strip()]


@dataclass
class CompileConfig(JsonSerializable):
    output: str = field(default="", alias="-o")
    literal_paper: bool = field(default=False, alias="--literal-paper")
    # one of the named subformulas instead of the whole specification
    part: str = ""


@dataclass
class PlayConfig(RunConfig):
    env: str = "compliant"
    seed: int = 0
    max_rounds: Optional[int] = None
    fairness_window: int = 8
    dump: str = ""
    literal_paper: bool = field(default=False, alias="--literal-paper")

    def policy_name(self) -> str:
        return f"random:{self.seed}" if self.env == "random" else self.env

    def parse(self, run_length: int) -> ScheduleConfig:
        max_rounds = self.max_rounds or default_max_rounds(run_length)
        return ScheduleConfig(max_rounds=max_rounds, fairness_window=self.fairness_window)
