from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dwsynth.logic import classify_fragment, variables
from dwsynth.minsky import (
    COUNTDOWN_RUN,
    DecrementAtZeroError,
    InvalidRunError,
    MachineConfig,
    MachineError,
    MachineSyntaxError,
    MinskyMachine,
    NonHaltingRunError,
    OrderCompiler,
    WrongSourceError,
    ZeroTestFailedError,
    bounded_halting_search,
    compile_to_fo2_ord,
    countdown_machine,
    encode_plan,
    format_machine,
    format_run,
    looping_machine,
    parse_machine,
    pools_for_run,
    reduction_signature,
    required_processes,
    run,
    strategy_from_run,
)
from dwsynth.minsky.library import ZERO_TEST_CHEAT_RUN, random_machine
from dwsynth.words import DataWord, Letter, ProcessPools, WordStructure, evaluate, parse_word_file

DATA = Path(__file__).parent.parent / "data"


def countdown_word():
    return parse_word_file((DATA / "countdown.dw").read_text())


def test_machine_file():
    machine = parse_machine((DATA / "countdown.mm").read_text())
    assert machine == countdown_machine()
    assert parse_machine(format_machine(machine)) == machine
    assert str(machine.transition("t1")) == "t1: i -> q1 dec c0"


@pytest.mark.parametrize(
    "text, error",
    [
        ("states i h\ninit i\nhalt h\nt0: i -> i inc c2\n", MachineSyntaxError),
        ("states i h\ninit i\nt0: i -> h inc c0\n", MachineError),
        ("states i h\ninit i\ninit h\nhalt h\n", MachineError),
        ("states i h\ninit i\nhalt h\nt0: i -> q inc c0\n", MachineError),
        ("states i oks\ninit i\nhalt oks\n", MachineError),
        ("states i h\ninit i\nhalt h\ni: i -> h inc c0\n", MachineError),
        ("states i h\ninit i\nhalt h\nt0: i -> h inc c0\nt0: h -> i dec c0\n", MachineError),
    ],
)
def test_machine_file_errors(text, error):
    with pytest.raises(error):
        parse_machine(text)


def test_step():
    machine = countdown_machine()
    start = machine.initial_config
    assert start == MachineConfig("i", 0, 0)
    assert machine.step(start, "t0") == MachineConfig("i", 1, 0)
    with pytest.raises(DecrementAtZeroError):
        machine.step(start, "t1")
    with pytest.raises(WrongSourceError):
        machine.step(start, "t2")
    with pytest.raises(ZeroTestFailedError):
        machine.step(MachineConfig("q2", 1, 0), "t3")
    assert machine.step(MachineConfig("q2", 0, 4), "t3") == MachineConfig("h", 0, 4)


def test_runs():
    machine = countdown_machine()
    halting = run(machine, COUNTDOWN_RUN)
    assert halting.halting
    assert halting.final == MachineConfig("h", 0, 0)
    assert format_run(halting) == "HALTED (h,0,0)"
    assert required_processes(halting) == 2
    assert [str(c) for c in halting.configs] == [
        "(i,0,0)",
        "(i,1,0)",
        "(i,2,0)",
        "(q1,1,0)",
        "(q2,0,0)",
        "(h,0,0)",
    ]

    stopped = run(machine, ["t0", "t1"])
    assert format_run(stopped) == "STOPPED (q1,0,0)"
    assert required_processes(run(machine, [])) == 1

    with pytest.raises(InvalidRunError) as info:
        run(machine, ZERO_TEST_CHEAT_RUN)
    assert info.value.index == 5
    with pytest.raises(InvalidRunError) as info:
        run(machine, ["t0", "nope"])
    assert info.value.index == 1


def test_bounded_halting_search():
    machine = countdown_machine()
    assert bounded_halting_search(machine, 10).names == COUNTDOWN_RUN
    assert bounded_halting_search(machine, 4) is None
    assert bounded_halting_search(looping_machine(), 20) is None
    trivial = MinskyMachine.of(("i",), "i", "i", [])
    assert bounded_halting_search(trivial, 0).names == ()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_search_finds_replayable_runs(seed):
    machine = random_machine(np.random.default_rng(seed))
    found = bounded_halting_search(machine, 6)
    if found is not None:
        assert len(found) <= 6
        replayed = run(machine, found.names)
        assert replayed.halting
        assert replayed.final == found.final


def test_plan_matches_the_countdown_word():
    machine = countdown_machine()
    sig = reduction_signature(machine)
    word = countdown_word().word
    plan = encode_plan(machine, COUNTDOWN_RUN)
    assert plan == tuple(letter for letter in word if letter.action in sig.sys_actions)
    assert sig.env_actions == {"oke", "koe"}
    assert {"t0", "q1", "noop", "kos"} <= sig.sys_actions


def test_run_strategy():
    machine = countdown_machine()
    strategy = strategy_from_run(machine, run(machine, COUNTDOWN_RUN))
    assert strategy.processes == ("0", "1")
    assert strategy(DataWord()) == Letter("oks", "0")
    assert strategy(DataWord.parse("oks@0")) is None
    assert strategy(DataWord.parse("oks@0 oke@e")) == Letter("i", "0")
    assert strategy(DataWord.parse("oke@e")) is None
    assert strategy(DataWord.parse("oks@0 oke@e oke@e")) == Letter("kos", "0")
    assert strategy(DataWord.parse("oks@0 oke@e i@0 oke@e oke@e")) == Letter("kos", "0")
    assert strategy(DataWord.parse("oks@0 koe@e")) is None
    assert strategy(countdown_word().word) is None
    assert pools_for_run(run(machine, COUNTDOWN_RUN)) == ProcessPools.of(["0", "1"], ["e"])
    with pytest.raises(NonHaltingRunError):
        strategy_from_run(machine, run(machine, ["t0"]))


def test_specification_holds_on_the_countdown_word():
    machine = countdown_machine()
    phi = compile_to_fo2_ord(machine)
    word_file = countdown_word()
    structure = WordStructure(word_file.word, word_file.pools)
    assert evaluate(phi, structure)

    profile = classify_fragment(phi)
    assert variables(phi) == {"x", "y"}
    assert profile.fragment_label == "FO2[~,<]"
    assert profile.uses_eq
    assert not profile.uses_succ


@pytest.mark.parametrize(
    "cut, expected",
    [
        (1, False),  # ends with Environment's last oke
        (2, True),  # ends with System's oks: Environment blocks
        (3, False),  # System stops in the middle of a pattern
        (26, False),  # System does not answer the first oke
        (27, True),
        (28, False),  # System blocks on the empty word
    ],
)
def test_specification_on_prefixes(cut, expected):
    phi = compile_to_fo2_ord(countdown_machine())
    word_file = countdown_word()
    prefix = word_file.word[: len(word_file.word) - cut]
    assert evaluate(phi, WordStructure(prefix, word_file.pools)) == expected


def test_no_cheat_is_seen_in_the_honest_word():
    formulas = OrderCompiler().compile(countdown_machine())
    word_file = countdown_word()
    for n in range(len(word_file.word) + 1):
        structure = WordStructure(word_file.word[:n], word_file.pools)
        assert not evaluate(formulas.koe_justified, structure), n


@pytest.mark.parametrize("machine", [looping_machine(), countdown_machine()])
def test_kos_on_a_single_oke_loses(machine):
    pools = ProcessPools.of(["0"], ["e"])
    cheat = WordStructure(DataWord.parse("oks@0 oke@e kos@0"), pools)
    formulas = OrderCompiler().compile(machine)
    assert not evaluate(formulas.kos_justified, cheat)
    assert not evaluate(formulas.phi, cheat)

    answered = WordStructure(DataWord.parse("oks@0 oke@e oke@e kos@0"), pools)
    assert evaluate(formulas.kos_justified, answered)
    assert evaluate(formulas.phi, answered)

    # the printed form accepts the first oke
    literal = OrderCompiler(literal=True).compile(machine)
    assert evaluate(literal.kos_justified, cheat)
    assert evaluate(literal.phi, cheat)


def test_kos_after_a_later_oks_loses():
    formulas = OrderCompiler().compile(countdown_machine())
    pools = ProcessPools.of(["0"], ["e"])
    word = DataWord.parse("oks@0 oke@e i@0 t0@0 inc0@0 oks@0 oke@e kos@0")
    assert not evaluate(formulas.phi, WordStructure(word, pools))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.lists(st.integers(0, 4), max_size=8))
def test_plan_processes_encode_the_counters(seed, picks):
    machine = random_machine(np.random.default_rng(seed), 3, 5)
    names = [machine.transitions[k].name for k in picks]
    try:
        replayed = run(machine, names)
    except InvalidRunError as error:
        names = names[: error.index]
        replayed = run(machine, names)
    plan = encode_plan(machine, names)
    assert len(plan) == 4 * len(names) + 2

    for k, config in enumerate(replayed.configs):
        prefix = plan[: 1 + 4 * k]
        assert prefix[-1].action == "oks"
        for i in (0, 1):
            incs = {letter.process for letter in prefix if letter.action == f"inc{i}"}
            decs = {letter.process for letter in prefix if letter.action == f"dec{i}"}
            assert decs <= incs
            assert len(incs - decs) == config.counter(i)


def test_named_parts():
    named = OrderCompiler().compile(countdown_machine()).named()
    assert len(named) == 14
    assert list(named)[-1] == "phi"
    literal = OrderCompiler(literal=True).compile(countdown_machine())
    assert literal.phi != named["phi"]
    assert literal.env_prefix == named["env_prefix"]


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_compiled_formulas_stay_in_two_variables(seed):
    phi = compile_to_fo2_ord(random_machine(np.random.default_rng(seed), 4, 5))
    assert variables(phi) <= {"x", "y"}
    assert classify_fragment(phi).fragment_label == "FO2[~,<]"
