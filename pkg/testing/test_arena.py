from pathlib import Path

import pytest

from dwsynth.arena import (
    BlockerPolicy,
    CompliantPolicy,
    ScheduleConfig,
    ScriptedPolicy,
    UnknownPolicyError,
    VerificationReport,
    cheat_cases,
    default_max_rounds,
    format_trace,
    make_policy,
    oke_after_ko_policy,
    parse_trace,
    policy_suite,
    premature_oke_policy,
    simulate,
    verify_play,
)
from dwsynth.arena.policies import double_oke_policy, early_koe_policy
from dwsynth.arena.verification import check_play
from dwsynth.logic import free_variables
from dwsynth.minsky import (
    COUNTDOWN_RUN,
    OrderCompiler,
    countdown_machine,
    pools_for_run,
    run,
    strategy_from_run,
)
from dwsynth.minsky.library import ZERO_TEST_CHEAT_RUN
from dwsynth.words import DataWord, Letter, WordStructure, evaluate, parse_word_file

DATA = Path(__file__).parent.parent / "data"

MACHINE = countdown_machine()
RUN = run(MACHINE, COUNTDOWN_RUN)
POOLS = pools_for_run(RUN)
FORMULAS = OrderCompiler().compile(MACHINE)
SIG = strategy_from_run(MACHINE, RUN).sig


@pytest.fixture
def honest():
    return strategy_from_run(MACHINE, RUN)


def play_against(strategy, policy, pools=POOLS, config=None):
    play = simulate(strategy, policy, pools, strategy.sig, config)
    window = (config or ScheduleConfig()).fairness_window
    return check_play(play, policy.name, strategy, FORMULAS.phi, pools, strategy.sig, window)


def test_compliant_play_is_the_countdown_word(honest):
    record = play_against(honest, CompliantPolicy(MACHINE, POOLS))
    expected = parse_word_file((DATA / "countdown.dw").read_text())
    assert record.play.word == expected.word
    assert record.play.stop_reason == "quiescent"
    assert record.play.rounds == 28
    assert record.play.forced == 0
    assert record.compatible and record.fair and record.satisfied
    assert record.ok


@pytest.mark.parametrize(
    "policy, word",
    [
        (BlockerPolicy(), "oks@0"),
        (premature_oke_policy(), "oks@0 oke@e i@0 oke@e kos@0"),
        (oke_after_ko_policy(), "oks@0 oke@e oke@e kos@0 oke@e"),
        (double_oke_policy(), "oks@0 oke@e oke@e kos@0"),
        (early_koe_policy(), "oks@0 koe@e"),
    ],
)
def test_honest_strategy_against_misbehaving_environments(honest, policy, word):
    record = play_against(honest, policy)
    assert record.play.word == DataWord.parse(word)
    assert record.satisfied
    assert record.compatible


def test_suite_does_not_falsify_the_honest_strategy(honest):
    config = ScheduleConfig(max_rounds=default_max_rounds(len(RUN)))
    report = verify_play(
        honest, FORMULAS.phi, policy_suite(MACHINE, POOLS, seeds=range(10)), POOLS, honest.sig, config
    )
    assert len(report.records) == 14
    assert report.falsified_by == []
    assert report.headline == "no falsifying policy found"
    assert report.warning is None
    assert VerificationReport().warning is not None


def _detected(case, word: DataWord) -> bool:
    formula = getattr(FORMULAS, case.detector)
    if not free_variables(formula):
        return evaluate(formula, WordStructure(word, case.pools))
    before_koe = word[: word.actions().index("koe")]
    last_oke = max(i for i, a in enumerate(before_koe.actions()) if a == "oke")
    return evaluate(formula, WordStructure(before_koe, case.pools), {"x": last_oke})


CASES = cheat_cases(MACHINE, RUN, ZERO_TEST_CHEAT_RUN)


def test_cheat_cases_cover_every_cheat():
    assert [case.name for case in CASES] == [
        "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "E1", "E2", "E3",
    ]


@pytest.mark.parametrize("case", CASES, ids=[case.name for case in CASES])
def test_cheats_are_caught(case):
    play = simulate(case.strategy, case.policy, case.pools, SIG)
    satisfied = evaluate(FORMULAS.phi, WordStructure(play.word, case.pools))
    if case.name.startswith("S"):
        # the cheating System loses
        assert not satisfied
        assert case.name == "S1" or "koe" in play.word.actions()
    else:
        assert satisfied
    assert _detected(case, play.word)


def test_literal_zero_test_breaks_the_honest_play(honest):
    policy = make_policy("compliant", MACHINE, POOLS, literal=True)
    play = simulate(honest, policy, POOLS, honest.sig)
    assert play.word.actions()[-1] == "koe"
    literal_phi = OrderCompiler(literal=True).compile(MACHINE).phi
    assert not evaluate(literal_phi, WordStructure(play.word, POOLS))


def test_fairness_window_forces_system():
    def oks_once(history: DataWord):
        return None if "oks" in history.actions() else Letter("oks", "0")

    always_oke = ScriptedPolicy({n: Letter("oke", "e") for n in range(10)}, "always-oke")
    play = simulate(oks_once, always_oke, POOLS, SIG, ScheduleConfig(max_rounds=6, fairness_window=3))
    assert play.word.actions() == ("oke", "oke", "oks", "oke", "oke", "oke")
    assert play.forced == 1
    assert play.stop_reason == "max-rounds"


def test_violations_stop_the_play(honest):
    policy = ScriptedPolicy({0: Letter("oks", "e")}, "thief")
    record = play_against(honest, policy)
    assert record.play.stop_reason == "violation"
    assert len(record.play.word) == 0
    assert record.play.violations
    assert not record.ok


@pytest.mark.parametrize("text", ["nope", "random:abc", "script:x", "script:1oke@e"])
def test_make_policy_errors(text):
    with pytest.raises(UnknownPolicyError):
        make_policy(text, MACHINE, POOLS)


def test_make_policy():
    assert make_policy("random:3", MACHINE, POOLS).name == "random:3"
    scripted = make_policy("script:1=oke@e,3=oke@e", MACHINE, POOLS)
    assert scripted(DataWord.parse("oks@0")) == Letter("oke", "e")
    assert scripted(DataWord()) is None
    assert isinstance(make_policy("compliant", MACHINE, POOLS), CompliantPolicy)


def test_random_policy_is_reproducible():
    history = DataWord.parse("oks@0")
    first = [make_policy(f"random:{seed}", MACHINE, POOLS)(history) for seed in range(8)]
    again = [make_policy(f"random:{seed}", MACHINE, POOLS)(history) for seed in range(8)]
    assert first == again
    assert set(first) <= {None, Letter("oke", "e")}


def test_trace_keeps_the_play(honest):
    play = simulate(honest, BlockerPolicy(), POOLS, honest.sig)
    text = format_trace(play, POOLS, "blocker", seed=7)
    trace = parse_trace(text)
    assert trace.word == play.word
    assert trace.pools == POOLS
    assert trace.meta == {
        "policy": "blocker",
        "stop": "quiescent",
        "rounds": "1",
        "forced": "0",
        "violations": "none",
        "seed": "7",
    }
