import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dwsynth.logic import (
    Action,
    And,
    Bottom,
    Eq,
    Exists,
    Forall,
    FormulaSyntaxError,
    Less,
    Not,
    Or,
    ProcPred,
    Signature,
    Sim,
    Succ,
    Top,
    UnboundVariableError,
    UnknownActionError,
    UnknownPredicateError,
    build_balanced_count_formula,
    build_exactly_one_formula,
    build_split_counting_formula,
    classify_fragment,
    conjunction,
    disjunction,
    free_variables,
    implies,
    parse_formula,
    parse_formula_file,
    parse_signature,
    render_formula,
    split_action_names,
    swap_variables,
    variables,
)
from dwsynth.logic.counting import InvalidCountError
from dwsynth.logic.parser import format_formula_file
from dwsynth.words import DataWord, ProcessPools, WordStructure, evaluate

VARIABLES = st.sampled_from(["x", "y", "z"])

atoms = st.one_of(
    st.builds(Action, st.sampled_from(["a", "b"]), VARIABLES),
    st.builds(ProcPred, st.sampled_from(["S", "E", "M"]), VARIABLES),
    st.builds(Eq, VARIABLES, VARIABLES),
    st.builds(Less, VARIABLES, VARIABLES),
    st.builds(Succ, VARIABLES, VARIABLES),
    st.builds(Sim, VARIABLES, VARIABLES),
    st.just(Top()),
    st.just(Bottom()),
)


def _extend(children):
    operands = st.lists(children, min_size=2, max_size=3).map(tuple)
    return st.one_of(
        st.builds(Not, children),
        operands.map(And),
        operands.map(Or),
        st.builds(Exists, VARIABLES, children),
        st.builds(Forall, VARIABLES, children),
    )


formulas = st.recursive(atoms, _extend, max_leaves=12)


def test_parse_builds_the_expected_tree():
    formula = parse_formula("E x. a(x) & !(E y. x < y & ProcS(y)) | x = y + 1 | x ~ y")
    expected = Exists(
        "x",
        Or(
            (
                And(
                    (
                        Action("a", "x"),
                        Not(Exists("y", And((Less("x", "y"), ProcPred("S", "y"))))),
                    )
                ),
                Succ("x", "y"),
                Sim("x", "y"),
            )
        ),
    )
    assert formula == expected


@pytest.mark.parametrize(
    "formula, text",
    [
        (implies(Action("a", "x"), Action("b", "x")), "!a(x) | b(x)"),
        (Succ("x", "y"), "x = y + 1"),
        (Not(Eq("x", "y")), "!(x = y)"),
        (And((Exists("x", Action("a", "x")), Action("b", "y"))), "(E x. a(x)) & b(y)"),
        (Or((Action("a", "x"), Exists("y", Less("x", "y")))), "a(x) | E y. x < y"),
        (And((Or((Top(), Bottom())), Top())), "(true | false) & true"),
    ],
)
def test_render(formula, text):
    assert render_formula(formula) == text
    assert parse_formula(text) == formula


@settings(max_examples=1000, deadline=None)
@given(formulas)
def test_printed_formulas_parse_back(formula):
    assert parse_formula(render_formula(formula)) == formula


@pytest.mark.parametrize(
    "text, error",
    [
        ("E x. a(x) &", FormulaSyntaxError),
        ("E x. (a(x)", FormulaSyntaxError),
        ("a(x, y)", UnknownPredicateError),
        ("ProcS(x, y)", UnknownPredicateError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_formula(text)


def test_syntax_error_position():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("E x.\n  a(x) & & b(x)")
    assert info.value.line == 2


def test_signature_and_free_variable_checks():
    sig = Signature.of({"a"}, {"b"})
    assert parse_formula("E x. a(x) | b(x)", sig=sig) == Exists(
        "x", Or((Action("a", "x"), Action("b", "x")))
    )
    with pytest.raises(UnknownActionError):
        parse_formula("E x. c(x)", sig=sig)
    with pytest.raises(UnboundVariableError):
        parse_formula("a(x)", free=[])
    assert parse_formula("a(x)", free=["x"]) == Action("a", "x")


def test_signature_header():
    sig = parse_signature("sig S={a,b} E={c}")
    assert sig == Signature.of({"a", "b"}, {"c"})
    assert str(sig) == "sig S={a,b} E={c}"
    assert sig.owner("c") == "E"
    with pytest.raises(ValueError):
        Signature.of({"a"}, {"a"})


def test_formula_file():
    text = "# spec\nsig S={a} E={b}\n\nE x. a(x)  # some a\n"
    parsed = parse_formula_file(text)
    assert parsed.signature == Signature.of({"a"}, {"b"})
    assert parsed.formula == Exists("x", Action("a", "x"))
    assert parse_formula_file(format_formula_file(parsed.formula, parsed.signature)) == parsed
    with pytest.raises(UnknownActionError):
        parse_formula_file("sig S={a} E={b}\nE x. c(x)")


def test_builders_and_variables():
    a, b = Action("a", "x"), Action("b", "y")
    assert conjunction() == Top()
    assert disjunction() == Bottom()
    assert conjunction(a) == a
    assert disjunction(a, b) == Or((a, b))

    formula = parse_formula("a(x) & E y. x < y & b(y)")
    assert free_variables(formula) == {"x"}
    assert variables(formula) == {"x", "y"}
    swapped = swap_variables(formula, "x", "y")
    assert swapped == parse_formula("a(y) & E x. y < x & b(x)")
    assert free_variables(swapped) == {"y"}


@pytest.mark.parametrize(
    "text, predicates, label",
    [
        ("E x. a(x)", (), "FO2"),
        ("E x. E y. x = y + 1", ("+1",), "FO2[+1]"),
        ("E x. E y. x < y & x ~ y & !(x = y)", ("~", "<", "="), "FO2[~,<]"),
        ("E x. E y. E z. x < y & y < z", ("<",), "FO3[<]"),
    ],
)
def test_classify_fragment(text, predicates, label):
    profile = classify_fragment(parse_formula(text))
    assert profile.predicates == predicates
    assert profile.fragment_label == label
    assert profile.two_variable == (label != "FO3[<]")


def test_split_counting():
    pools = ProcessPools.of(["p", "q"])
    structure = WordStructure(DataWord.parse("a@p a@p a@q b@q"), pools)
    at_least_one = build_split_counting_formula("a", 1)
    at_least_two = build_split_counting_formula("a", 2)
    assert classify_fragment(at_least_two).two_variable
    # positions 0..3, then the process elements p=4 and q=5
    for x, one, two in [(0, True, True), (4, True, True), (2, True, False), (3, True, False)]:
        assert evaluate(at_least_one, structure, {"x": x}) == one
        assert evaluate(at_least_two, structure, {"x": x}) == two
    exactly_one = build_exactly_one_formula("a")
    assert evaluate(exactly_one, structure, {"x": 5})
    assert not evaluate(exactly_one, structure, {"x": 4})
    with pytest.raises(InvalidCountError):
        build_split_counting_formula("a", 3)


def test_balanced_counting():
    first, second = split_action_names("a")
    assert (first, second) == ("a_1", "a_2")
    word = DataWord.of([(first, "p"), (second, "p"), (first, "p")])
    structure = WordStructure(word, ProcessPools.of(["p"]))
    for n, expected in [(1, True), (2, True), (3, True), (4, False)]:
        formula = build_balanced_count_formula("a", n)
        assert evaluate(formula, structure, {"x": 0}) == expected
        assert variables(formula) <= {"x", "y"}
    for n in (0, 5):
        with pytest.raises(InvalidCountError):
            build_balanced_count_formula("a", n)
