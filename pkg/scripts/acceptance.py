"""Runs the end-to-end checks of the reduction, the vector games and the evaluator,
and reports one line per check. Exits with status 1 if any check fails.

Every check is a sampled or exhaustive property at desk scale; see
`python scripts/acceptance.py --help` for the knobs.
"""

import sys
import time
from pathlib import Path

import numpy as np
import wandb
from configs import GamesConfig, OracleConfig, ReductionConfig
from simple_parsing import ArgumentParser
from simple_parsing.helpers.serialization import encode
from tqdm import tqdm, trange

from dwsynth.arena import cheat_cases, policy_suite, simulate, verify_play
from dwsynth.games import (
    THRESHOLD,
    SolverBudgetError,
    compute_minind,
    env_strategy_wins,
    lift_env_strategy,
    play_game,
    random_game,
    solve,
)
from dwsynth.logic import (
    Action,
    And,
    Eq,
    Exists,
    Forall,
    Less,
    Not,
    Or,
    ProcPred,
    Sim,
    Succ,
    classify_fragment,
    parse_formula,
    render_formula,
)
from dwsynth.minsky import OrderCompiler, pools_for_run, strategy_from_run
from dwsynth.minsky.library import ZERO_TEST_CHEAT_RUN, random_machine
from dwsynth.words import (
    DataWord,
    Letter,
    ProcessPools,
    WordStructure,
    evaluate,
    evaluate_grounded,
    parse_word_file,
)

parser = ArgumentParser()

parser.add_arguments(ReductionConfig, dest="reduction_config")
parser.add_arguments(GamesConfig, dest="games_config")
parser.add_arguments(OracleConfig, dest="oracle_config")

parser.add_argument("--seed", type=int, default=0)
parser.add_argument(
    "--word",
    type=str,
    default=str(Path(__file__).parent.parent / "data" / "countdown.dw"),
    help="Word of the honest play of the machine.",
)
parser.add_argument("--wandb", type=str, default="")

args = parser.parse_args()

reduction_config: ReductionConfig = args.reduction_config
games_config: GamesConfig = args.games_config
oracle_config: OracleConfig = args.oracle_config

rng = np.random.default_rng(args.seed)
use_wandb = len(args.wandb) > 0
if use_wandb:
    wandb.init(project=args.wandb)
    wandb.config.update(encode(args))

print(reduction_config, games_config, oracle_config)

machine, halting_run, schedule = reduction_config.parse()
compiler = OrderCompiler(reduction_config.literal_paper)
formulas = compiler.compile(machine)
honest = strategy_from_run(machine, halting_run)
pools = pools_for_run(halting_run)
solver_config = games_config.parse()

results: dict[str, bool] = {}


def report(step: int, name: str, passed: bool, started: float, **info) -> None:
    results[name] = passed
    to_log = {"passed": int(passed), "seconds": round(time.time() - started, 2), **info}
    tqdm.write(f"{name}: {'ok' if passed else 'FAILED'} {to_log}")
    if use_wandb:
        wandb.log({f"{name}/{key}": value for key, value in to_log.items()}, step=step)


# Honest System against the policy suite.
started = time.time()
suite = policy_suite(machine, pools, seeds=range(reduction_config.n_random_policies))
verification = verify_play(
    honest, formulas.phi, suite, pools, honest.sig, schedule, progress=True
)
report(
    1,
    "honest_strategy",
    not verification.falsified_by,
    started,
    plays=len(verification.records),
    falsified=len(verification.falsified_by),
)

# Seeded cheats: System cheats lose, Environment cheats are answered by kos.
started = time.time()
zero_test_names = None if reduction_config.machine else ZERO_TEST_CHEAT_RUN
caught = 0
cases = cheat_cases(machine, halting_run, zero_test_names)
for case in tqdm(cases):
    play = simulate(case.strategy, case.policy, case.pools, honest.sig, schedule)
    satisfied = evaluate(formulas.phi, WordStructure(play.word, case.pools))
    if case.name.startswith("S"):
        ok = not satisfied and (case.name == "S1" or "koe" in play.word.actions())
    else:
        ok = satisfied
    if not ok:
        tqdm.write(f"  {case.name} ({case.description}) not caught: {play.word}")
    caught += ok
report(2, "cheats", caught == len(cases), started, cases=len(cases), caught=caught)

# The word of the honest play, with and without its final state.
started = time.time()
word_file = parse_word_file(Path(args.word).read_text())
full = evaluate(formulas.phi, WordStructure(word_file.word, word_file.pools))
cut = evaluate(formulas.phi, WordStructure(word_file.word[:-1], word_file.pools))
report(3, "word_fixture", full and not cut, started, full=full, without_last=cut)

# Environment wins are monotone above minind, and lifts keep winning.
started = time.time()
violations = unknown = cells = lifted = lift_failures = 0
for _ in trange(games_config.n_specs):
    spec = random_game(
        rng, games_config.max_env_letters, games_config.max_bound, games_config.max_constant
    )
    minind = compute_minind(spec)
    for n_sys in range(games_config.max_sys + 1):
        for n_env in range(minind, minind + games_config.extra_pebbles):
            cells += 1
            try:
                below = solve(spec, n_sys, n_env, solver_config)
                above = solve(spec, n_sys, n_env + 1, solver_config).winner
            except SolverBudgetError:
                unknown += 1
                continue
            violations += below.winner == "E" and above == "S"
            if below.winner == "E" and n_env == minind and lifted < games_config.n_lift_specs:
                strategy = lift_env_strategy(spec, n_sys, n_env, below.strategy("E"))
                system = solve(spec, n_sys, n_env + 1, solver_config).strategy("S")
                won = play_game(spec, system, strategy, n_sys, n_env + 1).winner == "E"
                won = won and env_strategy_wins(
                    spec, n_sys, n_env + 1, strategy, budget=games_config.budget
                )
                lifted += 1
                lift_failures += not won
report(
    4,
    "monotonicity",
    violations == 0 and unknown <= games_config.max_unknown_share * cells,
    started,
    cells=cells,
    violations=violations,
    unknown=unknown,
)
report(
    5,
    "lift",
    lift_failures == 0 and (lifted > 0 or games_config.n_lift_specs == 0),
    started,
    lifted=lifted,
    failures=lift_failures,
)

# No Environment pebble: Environment wins; one pebble: System wins.
started = time.time()
pattern = all(
    solve(THRESHOLD, n_sys, 0).winner == "E" and solve(THRESHOLD, n_sys, 1).winner == "S"
    for n_sys in range(4)
)
report(6, "threshold", pattern, started)

# The evaluator against the grounding oracle.
started = time.time()
VARIABLES = ("x", "y", "z")
ORACLE_POOLS = ProcessPools.of(["p"], ["e"], ["m"])


def pick(options):
    return options[int(rng.integers(len(options)))]


def random_formula(depth: int):
    if depth == 0 or rng.random() < 0.3:
        kind = pick(("action", "proc", "eq", "less", "succ", "sim"))
        x, y = pick(VARIABLES), pick(VARIABLES)
        match kind:
            case "action":
                return Action(pick(("a", "b")), x)
            case "proc":
                return ProcPred(pick(("S", "E", "M")), x)
            case "eq":
                return Eq(x, y)
            case "less":
                return Less(x, y)
            case "succ":
                return Succ(x, y)
        return Sim(x, y)
    match pick(("not", "and", "or", "exists", "forall")):
        case "not":
            return Not(random_formula(depth - 1))
        case "and":
            return And((random_formula(depth - 1), random_formula(depth - 1)))
        case "or":
            return Or((random_formula(depth - 1), random_formula(depth - 1)))
        case "exists":
            return Exists(pick(VARIABLES), random_formula(depth - 1))
    return Forall(pick(VARIABLES), random_formula(depth - 1))


def random_word() -> DataWord:
    length = int(rng.integers(oracle_config.max_word_length + 1))
    return DataWord.of(
        Letter(("a", "b")[int(rng.integers(2))], ("p", "e", "m")[int(rng.integers(3))])
        for _ in range(length)
    )


disagreements = 0
for _ in trange(oracle_config.n_pairs):
    structure = WordStructure(random_word(), ORACLE_POOLS)
    formula = random_formula(oracle_config.max_depth)
    env = {v: int(rng.integers(structure.size)) for v in VARIABLES}
    disagreements += evaluate(formula, structure, env) != evaluate_grounded(
        formula, structure, env
    )
report(7, "evaluator_oracle", disagreements == 0, started, disagreements=disagreements)

# Printed formulas parse back to the same tree.
started = time.time()
mismatches = 0
for _ in trange(oracle_config.n_pairs):
    formula = random_formula(oracle_config.max_depth)
    mismatches += parse_formula(render_formula(formula)) != formula
report(10, "round_trip", mismatches == 0, started, mismatches=mismatches)

# Every solved game has one winner; every optimal play ends within the potential.
started = time.time()
determined = True
for _ in trange(games_config.n_specs):
    spec = random_game(rng, games_config.max_env_letters, games_config.max_bound)
    n_sys = int(rng.integers(games_config.max_sys + 1))
    n_env = int(rng.integers(compute_minind(spec) + 2))
    try:
        solution = solve(spec, n_sys, n_env, solver_config)
    except SolverBudgetError:
        continue
    play = play_game(spec, solution.strategy("S"), solution.strategy("E"), n_sys, n_env)
    limit = (n_sys + n_env) * max(spec.d, 1) * spec.bound
    determined &= solution.winner in ("S", "E") and play.winner == solution.winner
    determined &= play.n_non_pass <= limit
report(8, "determinacy", determined, started)

# Compiled specifications stay in two variables over ~, < and =.
started = time.time()
two_variable = True
for _ in trange(oracle_config.n_machines):
    profile = classify_fragment(compiler.compile(random_machine(rng, 4, 5)).phi)
    two_variable &= profile.two_variable and set(profile.predicates) <= {"~", "<", "="}
report(9, "two_variable", two_variable, started)

failed = [name for name, passed in results.items() if not passed]
print("all checks passed" if not failed else "failed: " + ", ".join(failed))
sys.exit(1 if failed else 0)
