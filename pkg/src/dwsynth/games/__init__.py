from .configs import (
    GameState,
    PlayerConfig,
    SolverBudgetError,
    config_satisfies,
    enumerate_moves,
    initial_state,
    make_config,
)
from .grid import CutProbe, GridResult, decide_grid, probe_cut
from .io import GameSyntaxError, format_game, parse_game
from .lattice import LocationLattice, NonValidActionsError, lattice_of, reachable
from .lifting import (
    AnchorError,
    LiftedEnvStrategy,
    LiftError,
    compute_minind,
    find_anchor,
    holds_P,
    lift_env_strategy,
    num_after,
    potential,
    upward_counts,
)
from .solver import (
    GameSolver,
    GameStrategy,
    PlayResult,
    Solution,
    SolverConfig,
    TableStrategy,
    env_strategy_wins,
    play_game,
    solve,
)
from .spec import AcceptanceCondition, Constraint, GameSpec, InvalidGameError
from .library import GUARDED_STEP, THRESHOLD, random_game
