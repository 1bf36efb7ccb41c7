"""Game files.

    letters S = a b
    letters E = c
    bound = 2
    accept:           # one block per acceptance condition
      S<1,0> >= 1     # vectors follow the declared letter order
      E<0> = 0

Locations that a block does not mention are unconstrained; an empty block
accepts every configuration. A file without blocks has an empty victory
condition, which System never satisfies.
"""

from __future__ import annotations

import pyparsing as pp

from dwsynth.games.spec import AcceptanceCondition, Constraint, GameSpec, InvalidGameError


class GameSyntaxError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _build_grammar() -> pp.ParserElement:
    EQ, COLON = pp.Suppress("="), pp.Suppress(":")
    integer = pp.common.integer
    letter = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    player = pp.one_of("S E", as_keyword=True)

    keyword = pp.MatchFirst(pp.Keyword(k) for k in ("letters", "bound", "accept"))
    letters = pp.Group(
        pp.Keyword("letters") + player + EQ + pp.Group(pp.ZeroOrMore(~keyword + letter))
    )
    bound = pp.Group(pp.Keyword("bound") + EQ + integer)
    vector = pp.Group(
        pp.Suppress("<")
        + pp.Optional(integer + pp.ZeroOrMore(pp.Suppress(",") + integer))
        + pp.Suppress(">")
    )
    constraint = pp.Group(player + vector + pp.one_of(">= =") + integer)
    block = pp.Group(pp.Suppress(pp.Keyword("accept")) + COLON + pp.ZeroOrMore(constraint))
    return (
        pp.Group(pp.ZeroOrMore(letters | bound))
        + pp.Group(pp.ZeroOrMore(block))
    ).ignore(pp.python_style_comment)


_GAME = _build_grammar()


def parse_game(text: str) -> GameSpec:
    """Parses the contents of a game file.

    Raises:
        GameSyntaxError: malformed text, with its line number.
        InvalidGameError: well-formed but inconsistent, e.g. a vector of the wrong
            length or a letter owned by both players.
    """
    try:
        header, blocks = _GAME.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise GameSyntaxError(e.msg, e.lineno) from e

    letters: dict[str, tuple[str, ...]] = {}
    bounds: list[int] = []
    for statement in header:
        if statement[0] == "letters":
            if statement[1] in letters:
                raise InvalidGameError(f"letters {statement[1]} declared twice")
            letters[statement[1]] = tuple(statement[2])
        else:
            bounds.append(statement[1])
    if len(bounds) != 1:
        raise InvalidGameError(f"expected one bound declaration, got {len(bounds)}")

    victory = []
    for block in blocks:
        constraints: dict[str, dict[tuple[int, ...], Constraint]] = {"S": {}, "E": {}}
        for who, vector, op, n in block:
            loc = tuple(vector)
            if loc in constraints[who]:
                raise InvalidGameError(f"location {who}<{','.join(map(str, loc))}> constrained twice")
            constraints[who][loc] = Constraint(op, n)
        victory.append(AcceptanceCondition.of(constraints["S"], constraints["E"]))
    return GameSpec.of(letters.get("S", ()), letters.get("E", ()), bounds[0], victory)


def format_game(spec: GameSpec) -> str:
    lines = [
        f"letters S = {' '.join(spec.sys_letters)}".rstrip(),
        f"letters E = {' '.join(spec.env_letters)}".rstrip(),
        f"bound = {spec.bound}",
    ]
    for condition in spec.victory:
        lines.append("accept:")
        for who in ("S", "E"):
            for loc, c in condition.constraints(who):
                lines.append(f"  {who}<{','.join(map(str, loc))}> {c}")
    return "\n".join(lines) + "\n"
