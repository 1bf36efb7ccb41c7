"""Concrete syntax for formulas.

    E x. a(x) & !(E y. x < y & ProcS(y)) | x = y + 1 | x ~ y

`E`/`A` are the quantifiers, `!` binds tighter than `&`, which binds tighter
than `|`, and the scope of a quantifier extends as far right as possible.
Formula files may contain `#` comments and an optional signature header
`sig S={a,b} E={c}` on their first non-empty line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import pyparsing as pp

from dwsynth.logic.ast import (
    KEYWORDS,
    Action,
    And,
    Bottom,
    Eq,
    Exists,
    Forall,
    Formula,
    Less,
    Not,
    Or,
    ProcPred,
    Signature,
    Sim,
    Succ,
    Top,
    action_names,
    free_variables,
)

pp.ParserElement.enable_packrat()


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


UnknownActionError = type("UnknownActionError", (ValueError,), {})
UnknownPredicateError = type("UnknownPredicateError", (ValueError,), {})
UnboundVariableError = type("UnboundVariableError", (ValueError,), {})


def _build_grammar() -> pp.ParserElement:
    LPAR, RPAR, DOT, COMMA = map(pp.Suppress, "().,")
    keyword = pp.MatchFirst(pp.Keyword(k) for k in sorted(KEYWORDS))
    identifier = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    variable = ~keyword + identifier
    arguments = LPAR + pp.Group(variable + pp.ZeroOrMore(COMMA + variable)) + RPAR

    def make_pool(s: str, loc: int, toks: pp.ParseResults) -> Formula:
        name, args = toks[0], list(toks[1])
        if len(args) != 1:
            raise UnknownPredicateError(
                f"line {pp.lineno(loc, s)}, column {pp.col(loc, s)}: "
                f"{name} takes one argument, got {len(args)}"
            )
        return ProcPred(name[-1], args[0])

    def make_action(s: str, loc: int, toks: pp.ParseResults) -> Formula:
        name, args = toks[0], list(toks[1])
        if len(args) != 1:
            raise UnknownPredicateError(
                f"line {pp.lineno(loc, s)}, column {pp.col(loc, s)}: "
                f"unknown predicate {name}/{len(args)}"
            )
        return Action(name, args[0])

    pool_atom = (pp.one_of("ProcS ProcE ProcM", as_keyword=True) + arguments).set_parse_action(
        make_pool
    )
    action_atom = (~keyword + identifier + arguments).set_parse_action(make_action)
    succ_atom = (variable + pp.Suppress("=") + variable + pp.Suppress("+") + pp.Suppress("1"))
    succ_atom.set_parse_action(lambda toks: Succ(toks[0], toks[1]))
    eq_atom = (variable + pp.Suppress("=") + variable).set_parse_action(
        lambda toks: Eq(toks[0], toks[1])
    )
    less_atom = (variable + pp.Suppress("<") + variable).set_parse_action(
        lambda toks: Less(toks[0], toks[1])
    )
    sim_atom = (variable + pp.Suppress("~") + variable).set_parse_action(
        lambda toks: Sim(toks[0], toks[1])
    )
    constant = pp.Keyword("true").set_parse_action(lambda: Top()) | pp.Keyword(
        "false"
    ).set_parse_action(lambda: Bottom())

    formula = pp.Forward()
    quantified = (pp.one_of("E A", as_keyword=True) + variable + DOT + formula).set_parse_action(
        lambda toks: Exists(toks[1], toks[2]) if toks[0] == "E" else Forall(toks[1], toks[2])
    )
    operand = (
        quantified
        | constant
        | pool_atom
        | action_atom
        | succ_atom
        | eq_atom
        | less_atom
        | sim_atom
    )
    formula <<= pp.infix_notation(
        operand,
        [
            (pp.Literal("!"), 1, pp.OpAssoc.RIGHT, lambda toks: Not(toks[0][1])),
            (pp.Literal("&"), 2, pp.OpAssoc.LEFT, lambda toks: And(tuple(toks[0][0::2]))),
            (pp.Literal("|"), 2, pp.OpAssoc.LEFT, lambda toks: Or(tuple(toks[0][0::2]))),
        ],
    )
    return formula


def _build_signature_grammar() -> pp.ParserElement:
    name = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    names = pp.Group(
        pp.Suppress("{")
        + pp.Optional(name + pp.ZeroOrMore(pp.Suppress(",") + name))
        + pp.Suppress("}")
    )
    part = pp.one_of("S E") + pp.Suppress("=") + names
    return pp.Suppress(pp.Keyword("sig")) + pp.OneOrMore(pp.Group(part))


_FORMULA = _build_grammar()
_SIGNATURE = _build_signature_grammar()


def parse_formula(
    text: str,
    sig: Optional[Signature] = None,
    free: Optional[Iterable[str]] = None,
) -> Formula:
    """Parses a formula.

    Args:
        text: the formula, possibly spanning several lines.
        sig: when given, every action atom must name an action of the signature.
        free: when given, the variables allowed to occur free.

    Raises:
        FormulaSyntaxError: malformed text, with line and column.
        UnknownActionError: an atom names an action outside `sig`.
        UnknownPredicateError: a predicate applied to the wrong number of variables.
        UnboundVariableError: a free variable not listed in `free`.
    """
    try:
        formula = _FORMULA.parse_string(text, parse_all=True)[0]
    except pp.ParseException as e:
        raise FormulaSyntaxError(e.msg, e.lineno, e.col) from e
    assert isinstance(formula, Formula)

    if sig is not None:
        unknown = action_names(formula) - sig.actions
        if unknown:
            raise UnknownActionError(f"actions not in the signature: {sorted(unknown)}")
    if free is not None:
        unbound = free_variables(formula) - set(free)
        if unbound:
            raise UnboundVariableError(f"unbound variables: {sorted(unbound)}")
    return formula


def parse_signature(text: str) -> Signature:
    "Parses a `sig S={a,b} E={c}` header."
    try:
        parts = _SIGNATURE.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise FormulaSyntaxError(e.msg, e.lineno, e.col) from e
    owned: dict[str, list[str]] = {"S": [], "E": []}
    for side, names in parts:
        owned[side].extend(names)
    return Signature.of(owned["S"], owned["E"])


@dataclass(frozen=True)
class FormulaFile:
    formula: Formula
    signature: Optional[Signature]


def _strip_comments(text: str) -> list[str]:
    # Comments are blanked rather than removed so that error positions stay valid.
    lines = []
    for line in text.splitlines():
        head, sep, tail = line.partition("#")
        lines.append(head + (" " * (len(tail) + 1) if sep else ""))
    return lines


def parse_formula_file(
    text: str, sig: Optional[Signature] = None, free: Optional[Iterable[str]] = None
) -> FormulaFile:
    """Parses the contents of a formula file.

    A `sig` header in the file takes precedence over the `sig` argument.
    """
    lines = _strip_comments(text)
    for i, line in enumerate(lines):
        if not line.strip():
            continue
        if line.split()[0] == "sig":
            sig = parse_signature(line.strip())
            lines[i] = ""
        break
    formula = parse_formula("\n".join(lines), sig=sig, free=free)
    return FormulaFile(formula, sig)


def format_formula_file(formula: Formula, sig: Optional[Signature] = None) -> str:
    from dwsynth.logic.printer import render_formula

    header = f"{sig}\n" if sig is not None else ""
    return header + render_formula(formula) + "\n"
