"""Data word files.

    pools S={0,1} E={e} M={}
    oks@0      # comments run to the end of the line
    oke@e

The header may be preceded by blank or comment lines; positions follow, one per
line. Lines starting with `# meta` after the header are kept as metadata.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import pyparsing as pp

from dwsynth.logic.ast import Signature
from dwsynth.words.word import DataWord, Letter, ProcessPools, check_ownership


class WordSyntaxError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _build_pools_grammar() -> pp.ParserElement:
    process = pp.Word(pp.alphanums + "_")
    members = pp.Group(
        pp.Suppress("{")
        + pp.Optional(process + pp.ZeroOrMore(pp.Suppress(",") + process))
        + pp.Suppress("}")
    )
    part = pp.Group(pp.one_of("S E M") + pp.Suppress("=") + members)
    return pp.Suppress(pp.Keyword("pools")) + pp.ZeroOrMore(part)


def _build_letter_grammar() -> pp.ParserElement:
    action = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    process = pp.Word(pp.alphanums + "_")
    return (action + pp.Suppress("@") + process).set_parse_action(
        lambda toks: Letter(toks[0], toks[1])
    )


_POOLS = _build_pools_grammar()
_LETTER = _build_letter_grammar()


def parse_pools(text: str) -> ProcessPools:
    "Parses a `pools S={0,1} E={e} M={}` header; missing parts are empty."
    parts = _POOLS.parse_string(text, parse_all=True)
    members: dict[str, list[str]] = {"S": [], "E": [], "M": []}
    for pool, names in parts:
        members[pool].extend(names)
    return ProcessPools.of(members["S"], members["E"], members["M"])


@dataclass(frozen=True)
class WordFile:
    word: DataWord
    pools: ProcessPools
    meta: dict[str, str] = field(default_factory=dict)


def parse_word_file(text: str, sig: Optional[Signature] = None) -> WordFile:
    """Parses the contents of a data word file.

    Args:
        text (str): a `pools` header, one `action@process` letter per line and
            optional `# meta key: value` lines.
        sig (Optional[Signature]): if given, letters are checked against the
            owner of their process.

    Returns:
        WordFile: the word, its pools and the metadata.

    Raises:
        WordSyntaxError: missing header or malformed line, with its number.
        OwnershipError: a position on a process outside the pools, or, given
            `sig`, on a process owned by the opponent.
    """
    pools: Optional[ProcessPools] = None
    letters: list[Letter] = []
    meta: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("# meta"):
            key, _, value = stripped[len("# meta") :].partition(":")
            meta[key.strip()] = value.strip()
            continue
        line = raw.partition("#")[0].strip()
        if not line:
            continue
        try:
            if pools is None:
                pools = parse_pools(line)
            else:
                letters.append(_LETTER.parse_string(line, parse_all=True)[0])
        except pp.ParseException as e:
            expected = "a pools header" if pools is None else "action@process"
            raise WordSyntaxError(f"expected {expected}: {e.msg}", number) from e
        except ValueError as e:
            raise WordSyntaxError(str(e), number) from e
    if pools is None:
        raise WordSyntaxError("missing pools header", 1)
    word = DataWord(tuple(letters))
    check_ownership(word, pools, sig)
    return WordFile(word, pools, meta)


def format_word(word: DataWord, pools: ProcessPools, meta: Optional[dict] = None) -> str:
    lines = [str(pools)] + [str(letter) for letter in word]
    for key, value in (meta or {}).items():
        lines.append(f"# meta {key}: {value}")
    return "\n".join(lines) + "\n"
