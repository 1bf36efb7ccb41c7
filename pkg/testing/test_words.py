from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

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
    Signature,
    Sim,
    Succ,
    UnboundVariableError,
    free_variables,
    parse_formula,
    parse_formula_file,
)
from dwsynth.words import (
    DataWord,
    Letter,
    OwnershipError,
    ProcessPools,
    WordStructure,
    WordSyntaxError,
    check_compatibility,
    check_fairness_window,
    check_ownership,
    evaluate,
    evaluate_grounded,
    format_word,
    parse_word_file,
    pending_moves,
    to_structure,
)

DATA = Path(__file__).parent.parent / "data"

SIG = Signature.of({"a"}, {"b"})


def countdown_word():
    return parse_word_file((DATA / "countdown.dw").read_text())


def test_countdown_word_structure():
    word_file = countdown_word()
    assert len(word_file.word) == 28
    assert word_file.pools == ProcessPools.of(["0", "1"], ["e"])
    structure = WordStructure(word_file.word, word_file.pools)
    assert structure.size == 31
    assert structure.element_name(0) == "0:oks@0"
    assert structure.element_name(30) == "proc e"
    assert structure.sim(9, 29)  # inc0@1 and process 1
    assert not structure.less(27, 28)  # process elements are not ordered
    assert structure.in_pool("E", 30)


def test_relation_tensors_match_the_predicates():
    structure = WordStructure(
        DataWord.parse("a@p b@e a@q a@p"), ProcessPools.of(["p", "q"], ["e"])
    )
    predicates = {"<": structure.less, "+1": structure.succ, "~": structure.sim}
    facts = structure.facts()
    for name, relation in structure.relation_tensors().items():
        for a in structure.elements:
            for b in structure.elements:
                assert bool(relation[a, b]) == predicates[name](a, b)
                assert ((name, a, b) in facts) == predicates[name](a, b)
    assert ("~", 0, 3) in facts
    assert ("+1", 1, 0) in facts
    assert ("<", 4, 5) not in facts  # process elements


def test_halting_formula_on_countdown_word():
    word_file = countdown_word()
    structure = WordStructure(word_file.word, word_file.pools)
    formula = parse_formula_file((DATA / "halts.fo").read_text()).formula
    assert evaluate(formula, structure)
    truncated = WordStructure(word_file.word[:-1], word_file.pools)
    assert not evaluate(formula, truncated)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("E x. E y. x < y & x ~ y & a(x) & a(y)", True),
        ("E x. E y. x = y + 1 & a(x) & a(y)", True),
        ("E x. E y. x = y + 1 & a(x) & a(y) & x ~ y", False),
        ("A x. ProcS(x) | ProcE(x) | a(x) | b(x)", True),
        ("E x. ProcE(x) & E y. y ~ x & a(y)", False),
        ("A x. !a(x) | ProcS(x) | E y. y ~ x & ProcS(y)", True),
    ],
)
def test_evaluate(text, expected):
    structure = WordStructure(
        DataWord.parse("a@p b@e a@q a@p"), ProcessPools.of(["p", "q"], ["e"])
    )
    assert evaluate(parse_formula(text), structure) == expected


def test_evaluate_needs_values_for_free_variables():
    structure = WordStructure(DataWord.parse("a@p"), ProcessPools.of(["p"]))
    formula = parse_formula("E y. x < y")
    with pytest.raises(UnboundVariableError):
        evaluate(formula, structure)
    with pytest.raises(UnboundVariableError):
        evaluate_grounded(formula, structure)
    assert not evaluate(formula, structure, {"x": 0})


VARIABLES = st.sampled_from(["x", "y"])

atoms = st.one_of(
    st.builds(Action, st.sampled_from(["a", "b"]), VARIABLES),
    st.builds(ProcPred, st.sampled_from(["S", "E", "M"]), VARIABLES),
    st.builds(Eq, VARIABLES, VARIABLES),
    st.builds(Less, VARIABLES, VARIABLES),
    st.builds(Succ, VARIABLES, VARIABLES),
    st.builds(Sim, VARIABLES, VARIABLES),
)
formulas = st.recursive(
    atoms,
    lambda children: st.one_of(
        st.builds(Not, children),
        st.lists(children, min_size=2, max_size=2).map(lambda fs: And(tuple(fs))),
        st.lists(children, min_size=2, max_size=2).map(lambda fs: Or(tuple(fs))),
        st.builds(Exists, VARIABLES, children),
        st.builds(Forall, VARIABLES, children),
    ),
    max_leaves=8,
)
words = st.lists(
    st.builds(Letter, st.sampled_from(["a", "b"]), st.sampled_from(["p", "e", "m"])),
    max_size=6,
).map(DataWord.of)
POOLS = ProcessPools.of(["p"], ["e"], ["m"])


@settings(max_examples=1000, deadline=None)
@given(formulas, words, st.data())
def test_evaluator_agrees_with_grounding(formula, word, data):
    structure = WordStructure(word, POOLS)
    env = {
        v: data.draw(st.sampled_from(list(structure.elements)))
        for v in sorted(free_variables(formula))
    }
    assert evaluate(formula, structure, env) == evaluate_grounded(formula, structure, env)


def always_a_once(history: DataWord):
    return None if "a" in history.actions() else Letter("a", "p")


@pytest.mark.parametrize(
    "text, compatible",
    [
        ("a@p", True),
        ("a@p b@e", True),
        ("b@e a@p", True),
        ("", False),
        ("b@e", False),
        ("a@q", False),
        ("a@p a@p", False),
    ],
)
def test_compatibility(text, compatible):
    assert check_compatibility(DataWord.parse(text), always_a_once, SIG) == compatible


def test_fairness_window():
    word = DataWord.parse("b@e b@e b@e a@p b@e")
    assert pending_moves(word, always_a_once) == [True, True, True, True, False]
    assert not check_fairness_window(word, always_a_once, SIG, 3)
    assert check_fairness_window(word, always_a_once, SIG, 4)
    assert check_fairness_window(DataWord(), always_a_once, SIG, 1)


def test_ownership():
    pools = ProcessPools.of(["p"], ["e"], ["m"])
    check_ownership(DataWord.parse("a@p b@e a@m b@m"), pools, SIG)
    with pytest.raises(OwnershipError):
        check_ownership(DataWord.parse("a@e"), pools, SIG)
    with pytest.raises(OwnershipError):
        to_structure(DataWord.parse("a@z"), pools)
    with pytest.raises(OwnershipError):
        check_ownership(DataWord.parse("c@p"), pools, SIG)
    check_ownership(DataWord.parse("c@p"), pools, None)
    with pytest.raises(ValueError):
        ProcessPools.of(["p"], ["p"])


def test_word_file_round_trip_keeps_metadata():
    word_file = countdown_word()
    text = format_word(word_file.word, word_file.pools, {"policy": "compliant"})
    assert text.startswith("pools S={0,1} E={e} M={}\noks@0\noke@e\n")
    assert text.endswith("h@0\n# meta policy: compliant\n")
    again = parse_word_file(text)
    assert again.word == word_file.word
    assert again.meta == {"policy": "compliant"}


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("# only a comment\n", 1),
        ("pools S={p}\na@p\nap\n", 3),
        ("pools S={p} X={q}\n", 1),
    ],
)
def test_word_file_errors(text, line):
    with pytest.raises(WordSyntaxError) as info:
        parse_word_file(text)
    assert info.value.line == line


def test_word_file_checks_ownership():
    with pytest.raises(OwnershipError):
        parse_word_file("pools S={p} E={e}\nb@p\n", SIG)
    with pytest.raises(OwnershipError):
        parse_word_file("pools S={p} E={e}\na@q\n")
