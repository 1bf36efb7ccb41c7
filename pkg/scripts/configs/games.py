from dataclasses import dataclass

from simple_parsing.helpers import JsonSerializable

from dwsynth.games import SolverConfig


@dataclass
class GamesConfig(JsonSerializable):
    n_specs: int = 200
    n_lift_specs: int = 20
    max_env_letters: int = 2
    max_bound: int = 1
    max_constant: int = 1
    # pebbles tried above minind
    extra_pebbles: int = 3
    max_sys: int = 2
    budget: int = 10**5
    move_budget: int = 10**4
    # share of budget-exceeded cells the monotonicity check tolerates
    max_unknown_share: float = 0.05

    def parse(self) -> SolverConfig:
        return SolverConfig(budget=self.budget, move_budget=self.move_budget)
