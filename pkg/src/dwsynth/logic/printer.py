from __future__ import annotations

from dwsynth.logic.ast import (
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
    Sim,
    Succ,
    Top,
)


def render_formula(formula: Formula) -> str:
    """Prints a formula in the concrete syntax accepted by `parse_formula`.

    The printer never rewrites the formula: negations, nesting of conjunctions and
    disjunctions, and constants are kept as they are, and parentheses are only
    added where the parser would otherwise build a different tree.
    """
    text, _ = _render(formula)
    return text


def _render(formula: Formula) -> tuple[str, bool]:
    "Returns the text and whether it ends with a quantifier whose scope is still open."
    match formula:
        case Top():
            return "true", False
        case Bottom():
            return "false", False
        case Action(name=name, var=var):
            return f"{name}({var})", False
        case ProcPred(pool=pool, var=var):
            return f"Proc{pool}({var})", False
        case Eq(left=left, right=right):
            return f"{left} = {right}", False
        case Less(left=left, right=right):
            return f"{left} < {right}", False
        case Succ(left=left, right=right):
            return f"{left} = {right} + 1", False
        case Sim(left=left, right=right):
            return f"{left} ~ {right}", False
        case Not(body=body):
            inner, _ = _render(body)
            if isinstance(body, (Top, Bottom, Action, ProcPred, Not)):
                return f"!{inner}", False
            return f"!({inner})", False
        case And(args=args):
            return _render_operands(args, " & ", nested=(And, Or))
        case Or(args=args):
            return _render_operands(args, " | ", nested=(Or,))
        case Exists(var=var, body=body):
            inner, _ = _render(body)
            return f"E {var}. {inner}", True
        case Forall(var=var, body=body):
            inner, _ = _render(body)
            return f"A {var}. {inner}", True
    raise TypeError(f"not a formula: {formula!r}")


def _render_operands(
    args: tuple[Formula, ...], separator: str, nested: tuple[type, ...]
) -> tuple[str, bool]:
    parts = []
    open_end = False
    for i, arg in enumerate(args):
        text, is_open = _render(arg)
        last = i == len(args) - 1
        if isinstance(arg, nested) or (is_open and not last):
            text = f"({text})"
            is_open = False
        parts.append(text)
        open_end = is_open
    return separator.join(parts), open_end
