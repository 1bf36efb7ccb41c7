"""Finite plays of the synthesis game.

Each round Environment may move first. While System has a pending move,
Environment may move at most `fairness_window - 1` times in a row; then System's
move is forced. The play stops when neither player moves, on an ownership
violation, or after `max_rounds` rounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

from simple_parsing.helpers import JsonSerializable

from dwsynth.arena.base import EnvironmentPolicy, SystemStrategy
from dwsynth.logic.ast import Signature
from dwsynth.words.word import DataWord, Letter, OwnershipError, ProcessPools, check_letter

StopReason = Literal["quiescent", "max-rounds", "violation"]


@dataclass
class ScheduleConfig(JsonSerializable):
    max_rounds: int = 256
    fairness_window: int = 8

    def __post_init__(self):
        assert self.max_rounds >= 1, "max_rounds must be positive"
        assert self.fairness_window >= 1, "fairness_window must be positive"


def default_max_rounds(run_length: int) -> int:
    "Round cap for the play of a run with `run_length` transitions."
    return 10 * run_length + 64


@dataclass
class Play:
    word: DataWord
    stop_reason: StopReason
    rounds: int
    violations: list[str] = field(default_factory=list)
    forced: int = 0  # System moves forced by the fairness window

    @property
    def meta(self) -> dict[str, str]:
        return {
            "stop": self.stop_reason,
            "rounds": str(self.rounds),
            "forced": str(self.forced),
            "violations": "; ".join(self.violations) or "none",
        }


def check_move(letter: Letter, player: Literal["S", "E"], pools: ProcessPools, sig: Signature) -> None:
    """Raises OwnershipError unless `letter` is an action of `player` on a process
    the player may use."""
    if letter.action not in (sig.sys_actions if player == "S" else sig.env_actions):
        raise OwnershipError(f"{letter}: not an action of {'System' if player == 'S' else 'Environment'}")
    check_letter(letter, pools, sig)


def simulate(
    strategy: SystemStrategy,
    policy: EnvironmentPolicy,
    pools: ProcessPools,
    sig: Signature,
    config: Optional[ScheduleConfig] = None,
) -> Play:
    config = config or ScheduleConfig()
    word = DataWord()
    streak = 0
    forced = 0
    for round_ in range(config.max_rounds):
        sys_move = strategy(word)
        if sys_move is not None and streak >= config.fairness_window - 1:
            env_move = None
            forced += 1
        else:
            env_move = policy(word)

        if env_move is not None:
            player, move = "E", env_move
            streak = streak + 1 if sys_move is not None else 0
        elif sys_move is not None:
            player, move = "S", sys_move
            streak = 0
        else:
            return Play(word, "quiescent", round_, forced=forced)

        try:
            check_move(move, player, pools, sig)
        except OwnershipError as e:
            return Play(word, "violation", round_ + 1, [str(e)], forced)
        word = word.append(move)
    return Play(word, "max-rounds", config.max_rounds, forced=forced)
