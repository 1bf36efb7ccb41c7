"""Machine files.

    states i q1 q2 h
    init i
    halt h
    t0: i -> i inc c0
    t1: i -> q1 dec c0
    t3: q2 -> h zero c0
"""

from __future__ import annotations

import pyparsing as pp

from dwsynth.minsky.machine import MachineError, MinskyMachine, Transition


class MachineSyntaxError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _build_grammar() -> pp.ParserElement:
    name = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    keyword = pp.MatchFirst(pp.Keyword(k) for k in ("states", "init", "halt"))
    state = ~keyword + ~(name + ":") + name
    states = pp.Group(pp.Keyword("states") + pp.Group(pp.OneOrMore(state)))
    init = pp.Group(pp.Keyword("init") + name)
    halt = pp.Group(pp.Keyword("halt") + name)
    counter = pp.Regex(r"c[01]").set_parse_action(lambda toks: int(toks[0][1]))
    transition = pp.Group(
        name
        + pp.Suppress(":")
        + name
        + pp.Suppress("->")
        + name
        + pp.one_of("inc dec zero", as_keyword=True)
        + counter
    ).set_parse_action(lambda toks: Transition(*toks[0]))
    return pp.ZeroOrMore(states | init | halt | transition).ignore(pp.python_style_comment)


_MACHINE = _build_grammar()


def parse_machine(text: str) -> MinskyMachine:
    """Parses the contents of a machine file.

    Raises:
        MachineSyntaxError: malformed text, with its line number.
        MachineError: missing or repeated declarations, unknown states, reserved
            or clashing names.
    """
    try:
        statements = _MACHINE.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise MachineSyntaxError(e.msg, e.lineno) from e

    declared: dict[str, list] = {"states": [], "init": [], "halt": []}
    transitions: list[Transition] = []
    for statement in statements:
        if isinstance(statement, Transition):
            transitions.append(statement)
        else:
            declared[statement[0]].append(statement[1])
    for key, values in declared.items():
        if len(values) != 1:
            raise MachineError(f"expected one '{key}' declaration, got {len(values)}")
    return MinskyMachine(
        tuple(declared["states"][0]),
        declared["init"][0],
        declared["halt"][0],
        tuple(transitions),
    )


def format_machine(machine: MinskyMachine) -> str:
    lines = [
        f"states {' '.join(machine.states)}",
        f"init {machine.init}",
        f"halt {machine.halt}",
    ] + [str(t) for t in machine.transitions]
    return "\n".join(lines) + "\n"
