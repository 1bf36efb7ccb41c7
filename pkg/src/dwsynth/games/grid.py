from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from tqdm import tqdm

from dwsynth.games.configs import SolverBudgetError
from dwsynth.games.lifting import compute_minind
from dwsynth.games.solver import SolverConfig, solve
from dwsynth.games.spec import GameSpec, Player

# Winner of a cell, or None when the solver ran out of budget.
Cell = Optional[Player]


def solve_cell(spec: GameSpec, n_sys: int, n_env: int, config: SolverConfig) -> Cell:
    try:
        return solve(spec, n_sys, n_env, config).winner
    except SolverBudgetError:
        return None


def _solve_cell_args(args: tuple) -> Cell:
    return solve_cell(*args)


@dataclass
class GridResult:
    """Winners over n_env = 0..minind (rows) and n_sys = 0..cut (columns)."""

    cut: int
    minind: int
    cells: list[list[Cell]]

    @property
    def system_wins_somewhere(self) -> bool:
        return any(cell == "S" for row in self.cells for cell in row)

    @property
    def n_unknown(self) -> int:
        return sum(cell is None for row in self.cells for cell in row)

    def winner(self, n_sys: int, n_env: int) -> Cell:
        return self.cells[n_env][n_sys]

    def to_tsv(self) -> str:
        "Tab separated dump: header row of n_sys values, then one row per n_env."
        lines = ["nE\\nS\t" + "\t".join(str(n) for n in range(self.cut + 1))]
        for n_env, row in enumerate(self.cells):
            lines.append(f"{n_env}\t" + "\t".join(cell or "?" for cell in row))
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        "Aligned text table."
        width = max(len(str(self.cut)), len(str(self.minind)), 1) + 1
        header = "nE\\nS".ljust(6) + "".join(str(n).rjust(width) for n in range(self.cut + 1))
        lines = [header]
        for n_env, row in enumerate(self.cells):
            lines.append(
                str(n_env).ljust(6) + "".join((cell or "?").rjust(width) for cell in row)
            )
        return "\n".join(lines) + "\n"


def decide_grid(
    spec: GameSpec,
    cut: int,
    minind: Optional[int] = None,
    config: Optional[SolverConfig] = None,
    jobs: int = 1,
    progress: bool = False,
) -> GridResult:
    """Solves every cell of [0, cut] × [0, minind].

    System wins for some pebble numbers iff some cell is won by System, provided
    `cut` is large enough. `minind` defaults to `compute_minind(spec)`. Cells whose
    solving exceeds the budget are left unknown. With `jobs > 1` the cells are
    solved in worker processes; the table is the same.
    """
    assert cut >= 0, "cut must be nonnegative"
    if minind is None:
        minind = compute_minind(spec)
    config = config or SolverConfig()
    tasks = [
        (spec, n_sys, n_env, config)
        for n_env in range(minind + 1)
        for n_sys in range(cut + 1)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                tqdm(pool.map(_solve_cell_args, tasks), total=len(tasks), disable=not progress)
            )
    else:
        results = [_solve_cell_args(task) for task in tqdm(tasks, disable=not progress)]
    cells = [results[i : i + cut + 1] for i in range(0, len(results), cut + 1)]
    return GridResult(cut, minind, cells)


@dataclass
class CutProbe:
    """Smallest n_sys from which every row is constant over `window` columns.
    Heuristic: the true cut comes from a bound this package does not compute."""

    cut: Optional[int]
    window: int
    max_sys: int
    heuristic: bool = True


def probe_cut(
    spec: GameSpec,
    window: int,
    max_sys: int = 8,
    minind: Optional[int] = None,
    config: Optional[SolverConfig] = None,
) -> CutProbe:
    """Looks for the smallest n_sys ≤ max_sys such that, for every n_env ≤ minind,
    the winners at n_sys, ..., n_sys + window - 1 are all equal. Unknown cells
    never count as equal. `cut` is None when no such n_sys exists."""
    assert window >= 1, "window must be positive"
    grid = decide_grid(spec, max_sys + window - 1, minind, config)
    for n_sys in range(max_sys + 1):
        stable = all(
            None not in row[n_sys : n_sys + window]
            and len(set(row[n_sys : n_sys + window])) == 1
            for row in grid.cells
        )
        if stable:
            return CutProbe(n_sys, window, max_sys)
    return CutProbe(None, window, max_sys)
