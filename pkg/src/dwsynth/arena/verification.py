from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from tqdm import tqdm

from dwsynth.arena.base import EnvironmentPolicy, SystemStrategy
from dwsynth.arena.scheduler import Play, ScheduleConfig, simulate
from dwsynth.logic.ast import Formula, Signature
from dwsynth.words.checks import check_compatibility, check_fairness_window
from dwsynth.words.evaluator import evaluate
from dwsynth.words.structure import WordStructure
from dwsynth.words.word import ProcessPools


@dataclass
class PlayRecord:
    policy: str
    play: Play
    compatible: bool
    fair: bool
    satisfied: bool

    @property
    def ok(self) -> bool:
        return self.satisfied and self.play.stop_reason != "violation"


@dataclass
class VerificationReport:
    """Outcome of playing a strategy against a suite of Environment policies.
    Sampling only: a clean report does not prove the strategy winning."""

    records: list[PlayRecord] = field(default_factory=list)

    @property
    def falsified_by(self) -> list[str]:
        return [r.policy for r in self.records if not r.ok]

    @property
    def warning(self) -> Optional[str]:
        if not self.records:
            return "no policies given: the check is vacuous"
        return None

    @property
    def headline(self) -> str:
        if self.falsified_by:
            return "falsified by " + ", ".join(self.falsified_by)
        return "no falsifying policy found"


def check_play(
    play: Play,
    policy_name: str,
    strategy: SystemStrategy,
    formula: Formula,
    pools: ProcessPools,
    sig: Signature,
    window: int,
) -> PlayRecord:
    return PlayRecord(
        policy_name,
        play,
        compatible=check_compatibility(play.word, strategy, sig),
        fair=check_fairness_window(play.word, strategy, sig, window),
        satisfied=evaluate(formula, WordStructure(play.word, pools)),
    )


def verify_play(
    strategy: SystemStrategy,
    formula: Formula,
    policies: Sequence[EnvironmentPolicy],
    pools: ProcessPools,
    sig: Signature,
    config: Optional[ScheduleConfig] = None,
    progress: bool = False,
) -> VerificationReport:
    """Plays `strategy` against each policy and model checks every play."""
    config = config or ScheduleConfig()
    report = VerificationReport()
    for policy in tqdm(policies, disable=not progress):
        play = simulate(strategy, policy, pools, sig, config)
        report.records.append(
            check_play(play, policy.name, strategy, formula, pools, sig, config.fairness_window)
        )
    return report
