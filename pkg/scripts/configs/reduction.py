from dataclasses import dataclass
from pathlib import Path
from typing import Tuple

from simple_parsing.helpers import JsonSerializable

from dwsynth.arena import ScheduleConfig, default_max_rounds
from dwsynth.minsky import (
    MinskyMachine,
    Run,
    bounded_halting_search,
    countdown_machine,
    parse_machine,
)


@dataclass
class ReductionConfig(JsonSerializable):
    # machine file; the countdown machine when empty
    machine: str = ""
    max_steps: int = 64
    n_random_policies: int = 20
    fairness_window: int = 8
    literal_paper: bool = False

    def parse(self) -> Tuple[MinskyMachine, Run, ScheduleConfig]:
        machine = (
            parse_machine(Path(self.machine).read_text()) if self.machine else countdown_machine()
        )
        halting_run = bounded_halting_search(machine, self.max_steps)
        if halting_run is None:
            raise ValueError(f"no halting run within {self.max_steps} steps")
        schedule = ScheduleConfig(
            max_rounds=default_max_rounds(len(halting_run)),
            fairness_window=self.fairness_window,
        )
        return machine, halting_run, schedule
