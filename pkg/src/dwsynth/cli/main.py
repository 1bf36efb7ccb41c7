"""`dwsynth <command> [options] files...`

Reports are `key: value` lines or tab separated tables on stdout; diagnostics go
to stderr. Exit status: 0 success, 1 negative verdict, 2 input error, 3 budget
exceeded.
"""

from __future__ import annotations

import os
import sys
from argparse import Namespace
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence, TextIO

from simple_parsing import ArgumentParser

from dwsynth.arena.io import format_trace
from dwsynth.arena.policies import make_policy
from dwsynth.arena.scheduler import simulate
from dwsynth.arena.verification import check_play
from dwsynth.cli.configs import (
    CheckConfig,
    CompileConfig,
    EvalConfig,
    GridConfig,
    LiftCheckConfig,
    PlayConfig,
    RunConfig,
    SolveConfig,
)
from dwsynth.games.configs import SolverBudgetError
from dwsynth.games.grid import decide_grid, probe_cut
from dwsynth.games.io import parse_game
from dwsynth.games.lifting import compute_minind, lift_env_strategy
from dwsynth.games.solver import SolverConfig, env_strategy_wins, play_game, solve
from dwsynth.games.spec import PLAYER_NAMES
from dwsynth.logic.ast import formula_size
from dwsynth.logic.fragments import classify_fragment
from dwsynth.logic.parser import format_formula_file, parse_formula_file
from dwsynth.minsky.compiler import OrderCompiler, reduction_signature
from dwsynth.minsky.io import parse_machine
from dwsynth.minsky.machine import MinskyMachine, Run, format_run, run
from dwsynth.minsky.search import bounded_halting_search
from dwsynth.minsky.strategy import pools_for_run, strategy_from_run
from dwsynth.words.evaluator import evaluate, evaluate_grounded
from dwsynth.words.io import parse_word_file
from dwsynth.words.structure import WordStructure

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class Reporter:
    "Writes report lines; verdict words are coloured on a terminal unless NO_COLOR is set."

    def __init__(self, out: TextIO):
        self.out = out
        self.colour = out.isatty() and not os.environ.get("NO_COLOR")

    def line(self, text: object = "") -> None:
        print(text, file=self.out)

    def write(self, text: str) -> None:
        self.out.write(text)

    def field(self, key: str, value: object) -> None:
        self.line(f"{key}: {value}")

    def verdict(self, word: str, good: bool) -> str:
        if not self.colour:
            return word
        return f"\033[{32 if good else 31}m{word}\033[0m"

    def yes_no(self, value: bool) -> str:
        return self.verdict("yes" if value else "no", value)


def _read(path: Path) -> str:
    return Path(path).read_text()


def _names(text: str) -> list[str]:
    return [name.strip() for name in text.split(",") if name.strip()]


def run_check(args: Namespace, out: Reporter) -> int:
    config: CheckConfig = args.config
    parsed = parse_formula_file(_read(args.formula), free=_names(config.free) or None)
    profile = classify_fragment(parsed.formula)
    out.field("variables", ",".join(sorted(profile.variable_names)) or "-")
    out.field("predicates", ",".join(profile.predicates) or "-")
    out.field("fragment", profile.fragment_label)
    out.field("two_variable", out.yes_no(profile.two_variable))
    out.field("equality", "yes" if profile.uses_eq else "no")
    out.field("size", formula_size(parsed.formula))
    return EXIT_OK


def run_eval(args: Namespace, out: Reporter) -> int:
    config: EvalConfig = args.config
    env = config.env()
    parsed = parse_formula_file(_read(args.formula), config.signature(), free=list(env))
    word_file = parse_word_file(_read(args.word), parsed.signature)
    structure = WordStructure(word_file.word, word_file.pools)
    value = evaluate(parsed.formula, structure, env)
    out.line(out.verdict("true" if value else "false", value))
    if config.oracle:
        agree = evaluate_grounded(parsed.formula, structure, env) == value
        out.field("oracle", out.verdict("agree" if agree else "disagree", agree))
        if not agree:
            return EXIT_NEGATIVE
    return EXIT_OK if value else EXIT_NEGATIVE


def run_solve(args: Namespace, out: Reporter) -> int:
    config: SolveConfig = args.config
    spec = parse_game(_read(args.game))
    winner = solve(spec, config.ns, config.ne, config.parse()).winner
    out.line(out.verdict(PLAYER_NAMES[winner], winner == "S"))
    return EXIT_OK


def run_grid(args: Namespace, out: Reporter) -> int:
    config: GridConfig = args.config
    spec = parse_game(_read(args.game))
    progress = sys.stderr.isatty()
    result = decide_grid(
        spec, config.cut, config.minind, config.parse(), jobs=config.jobs, progress=progress
    )
    if config.tsv:
        out.write(result.to_tsv())
        return EXIT_OK
    out.write(result.to_table())
    out.field("minind", result.minind)
    out.field("system_wins_somewhere", out.yes_no(result.system_wins_somewhere))
    out.field("unknown", result.n_unknown)
    if config.probe > 0:
        probe = probe_cut(spec, config.probe, config.cut, result.minind, config.parse())
        out.field("probed_cut", "none" if probe.cut is None else f"{probe.cut} (heuristic)")
    return EXIT_OK


def run_bounds(args: Namespace, out: Reporter) -> int:
    spec = parse_game(_read(args.game))
    out.field("K", spec.K)
    out.field("d", spec.d)
    out.field("B", spec.bound)
    out.field("minind", compute_minind(spec))
    return EXIT_OK


def _machine_run(machine: MinskyMachine, config: RunConfig, out: Reporter) -> Optional[Run]:
    names = config.names()
    if names:
        return run(machine, names)
    found = bounded_halting_search(machine, config.max_steps)
    if found is None:
        out.field("search", f"no halting run within {config.max_steps} steps")
        return None
    out.field("trans", ",".join(found.names))
    return found


def run_mm_run(args: Namespace, out: Reporter) -> int:
    machine = parse_machine(_read(args.machine))
    found = _machine_run(machine, args.config, out)
    if found is None:
        return EXIT_NEGATIVE
    out.line(out.verdict(format_run(found), found.halting))
    return EXIT_OK if found.halting else EXIT_NEGATIVE


def run_mm_compile(args: Namespace, out: Reporter) -> int:
    config: CompileConfig = args.config
    machine = parse_machine(_read(args.machine))
    if config.literal_paper:
        print(
            "warning: literal variant; its zero test fires on every increment",
            file=sys.stderr,
        )
    formulas = OrderCompiler(config.literal_paper).compile(machine).named()
    if config.part and config.part not in formulas:
        raise ValueError(f"unknown part {config.part!r}, expected one of {', '.join(formulas)}")
    formula = formulas[config.part or "phi"]
    text = format_formula_file(formula, reduction_signature(machine))
    if not config.output:
        out.write(text)
        return EXIT_OK
    Path(config.output).write_text(text)
    out.field("wrote", config.output)
    out.field("fragment", classify_fragment(formula).fragment_label)
    out.field("size", formula_size(formula))
    return EXIT_OK


def run_mm_play(args: Namespace, out: Reporter) -> int:
    config: PlayConfig = args.config
    machine = parse_machine(_read(args.machine))
    found = _machine_run(machine, config, out)
    if found is None:
        return EXIT_NEGATIVE
    strategy = strategy_from_run(machine, found)
    pools = pools_for_run(found)
    policy = make_policy(config.policy_name(), machine, pools, config.literal_paper)
    phi = OrderCompiler(config.literal_paper).compile(machine).phi
    schedule = config.parse(len(found))
    play = simulate(strategy, policy, pools, strategy.sig, schedule)
    record = check_play(
        play, policy.name, strategy, phi, pools, strategy.sig, schedule.fairness_window
    )

    out.field("policy", policy.name)
    out.field("pools", pools)
    out.field("word", play.word)
    out.field("length", len(play.word))
    for key, value in play.meta.items():
        out.field(key, value)
    out.field("compatible", out.yes_no(record.compatible))
    out.field("fair", out.yes_no(record.fair))
    out.field("satisfied", out.verdict("true" if record.satisfied else "false", record.satisfied))
    if config.dump:
        seed = config.seed if config.env == "random" else None
        Path(config.dump).write_text(format_trace(play, pools, policy.name, seed))
    return EXIT_OK if record.ok else EXIT_NEGATIVE


def run_lift_check(args: Namespace, out: Reporter) -> int:
    config: LiftCheckConfig = args.config
    spec = parse_game(_read(args.game))
    solver_config = SolverConfig(budget=config.budget)
    out.field("minind", compute_minind(spec))
    base = solve(spec, config.ns, config.ne, solver_config)
    out.field("winner", PLAYER_NAMES[base.winner])
    if base.winner == "S":
        out.field("lift", "skipped, System wins")
        return EXIT_OK

    n_env = config.ne + 1
    lifted = lift_env_strategy(spec, config.ns, config.ne, base.strategy("E"))
    system = solve(spec, config.ns, n_env, solver_config).strategy("S")
    play = play_game(spec, system, lifted, config.ns, n_env)
    verified = env_strategy_wins(spec, config.ns, n_env, lifted, budget=config.budget)
    out.field("lifted_pebbles", n_env)
    out.field("play", f"{PLAYER_NAMES[play.winner]} after {len(play.moves)} moves")
    out.field("verified", out.yes_no(verified))
    return EXIT_OK if verified else EXIT_NEGATIVE


@dataclass(frozen=True)
class Command:
    handler: Callable[[Namespace, Reporter], int]
    config: Optional[type]
    inputs: tuple[str, ...]
    help: str


COMMANDS: dict[str, Command] = {
    "check": Command(run_check, CheckConfig, ("formula",), "fragment of a formula file"),
    "eval": Command(run_eval, EvalConfig, ("formula", "word"), "model check a data word"),
    "solve": Command(run_solve, SolveConfig, ("game",), "winner of a vector game"),
    "grid": Command(run_grid, GridConfig, ("game",), "winners over a grid of pebble numbers"),
    "bounds": Command(run_bounds, None, ("game",), "constants of a vector game"),
    "mm-run": Command(run_mm_run, RunConfig, ("machine",), "replay or search a machine run"),
    "mm-compile": Command(
        run_mm_compile, CompileConfig, ("machine",), "compile a machine to its specification"
    ),
    "mm-play": Command(
        run_mm_play, PlayConfig, ("machine",), "play the reduction against an Environment policy"
    ),
    "lift-check": Command(
        run_lift_check, LiftCheckConfig, ("game",), "check the Environment strategy lift"
    ),
}


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="dwsynth", description=__doc__.splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, command in COMMANDS.items():
        sub = subparsers.add_parser(name, help=command.help)
        for input_name in command.inputs:
            sub.add_argument(input_name, type=Path)
        if command.config is not None:
            sub.add_arguments(command.config, dest="config")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = Reporter(sys.stdout)
    try:
        return COMMANDS[args.command].handler(args, out)
    except (SolverBudgetError, OverflowError) as e:
        print(f"dwsynth: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as e:
        print(f"dwsynth: {e}", file=sys.stderr)
        return EXIT_INPUT
