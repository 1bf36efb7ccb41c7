"""Abstract syntax of first order formulas over data words.

Atoms talk about positions and processes of a data word: unary action
predicates `a(x)`, the pool predicates `ProcS(x)`, `ProcE(x)`, `ProcM(x)`, and the
binary predicates `x = y`, `x < y`, `x = y + 1` (x is the successor of y) and
`x ~ y` (same process). Conjunctions and disjunctions are n-ary; the nesting
chosen by the caller is preserved by parsing and printing.
"""

from __future__ import annotations

import re
from abc import ABC
from dataclasses import dataclass
from typing import Iterator, Literal

IDENTIFIER = re.compile(r"[a-zA-Z_][a-zA-Z0-9_]*")
KEYWORDS = frozenset({"E", "A", "true", "false", "sig", "ProcS", "ProcE", "ProcM"})

Pool = Literal["S", "E", "M"]


class Formula(ABC):
    """Base class of all formula nodes. Nodes are immutable and hashable."""

    def children(self) -> tuple[Formula, ...]:
        return ()

    def walk(self) -> Iterator[Formula]:
        "Pre-order traversal of the formula."
        yield self
        for child in self.children():
            yield from child.walk()

    def __str__(self) -> str:
        from dwsynth.logic.printer import render_formula

        return render_formula(self)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Action(Formula):
    name: str
    var: str


@dataclass(frozen=True)
class ProcPred(Formula):
    pool: Pool
    var: str


@dataclass(frozen=True)
class Eq(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Less(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Succ(Formula):
    "`left = right + 1`"
    left: str
    right: str


@dataclass(frozen=True)
class Sim(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Not(Formula):
    body: Formula

    def children(self) -> tuple[Formula, ...]:
        return (self.body,)


@dataclass(frozen=True)
class And(Formula):
    args: tuple[Formula, ...]

    def __post_init__(self):
        assert len(self.args) >= 2, "And needs at least two operands"

    def children(self) -> tuple[Formula, ...]:
        return self.args


@dataclass(frozen=True)
class Or(Formula):
    args: tuple[Formula, ...]

    def __post_init__(self):
        assert len(self.args) >= 2, "Or needs at least two operands"

    def children(self) -> tuple[Formula, ...]:
        return self.args


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula

    def children(self) -> tuple[Formula, ...]:
        return (self.body,)


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula

    def children(self) -> tuple[Formula, ...]:
        return (self.body,)


Atom = Top | Bottom | Action | ProcPred | Eq | Less | Succ | Sim
BinaryAtom = Eq | Less | Succ | Sim
Quantifier = Exists | Forall


@dataclass(frozen=True)
class Signature:
    """Action names, partitioned between System and Environment."""

    sys_actions: frozenset[str]
    env_actions: frozenset[str]

    def __post_init__(self):
        overlap = self.sys_actions & self.env_actions
        if overlap:
            raise ValueError(f"actions owned by both players: {sorted(overlap)}")
        if not self.sys_actions | self.env_actions:
            raise ValueError("a signature needs at least one action")
        for name in self.sys_actions | self.env_actions:
            if not IDENTIFIER.fullmatch(name) or name in KEYWORDS:
                raise ValueError(f"invalid action name {name!r}")

    @classmethod
    def of(cls, sys_actions, env_actions) -> Signature:
        return cls(frozenset(sys_actions), frozenset(env_actions))

    @property
    def actions(self) -> frozenset[str]:
        return self.sys_actions | self.env_actions

    def owner(self, action: str) -> Literal["S", "E"]:
        if action in self.sys_actions:
            return "S"
        if action in self.env_actions:
            return "E"
        raise KeyError(action)

    def __str__(self) -> str:
        sys_part = ",".join(sorted(self.sys_actions))
        env_part = ",".join(sorted(self.env_actions))
        return f"sig S={{{sys_part}}} E={{{env_part}}}"


def conjunction(*formulas: Formula) -> Formula:
    "n-ary conjunction; the empty conjunction is true."
    if not formulas:
        return Top()
    if len(formulas) == 1:
        return formulas[0]
    return And(tuple(formulas))


def disjunction(*formulas: Formula) -> Formula:
    "n-ary disjunction; the empty disjunction is false."
    if not formulas:
        return Bottom()
    if len(formulas) == 1:
        return formulas[0]
    return Or(tuple(formulas))


def implies(premise: Formula, conclusion: Formula) -> Formula:
    return Or((Not(premise), conclusion))


def variables(formula: Formula) -> frozenset[str]:
    "Every variable name occurring in the formula, bound or free."
    names: set[str] = set()
    for node in formula.walk():
        match node:
            case Action(var=v) | ProcPred(var=v) | Exists(var=v) | Forall(var=v):
                names.add(v)
            case Eq(left=a, right=b) | Less(left=a, right=b) | Succ(
                left=a, right=b
            ) | Sim(left=a, right=b):
                names.update((a, b))
    return frozenset(names)


def free_variables(formula: Formula) -> frozenset[str]:
    match formula:
        case Action(var=v) | ProcPred(var=v):
            return frozenset({v})
        case Eq(left=a, right=b) | Less(left=a, right=b) | Succ(
            left=a, right=b
        ) | Sim(left=a, right=b):
            return frozenset({a, b})
        case Exists(var=v, body=body) | Forall(var=v, body=body):
            return free_variables(body) - {v}
        case _:
            result: frozenset[str] = frozenset()
            for child in formula.children():
                result |= free_variables(child)
            return result


def swap_variables(formula: Formula, a: str, b: str) -> Formula:
    """Exchange the names `a` and `b` everywhere, binders included.

    The swap is a bijection on names, so bound and free occurrences keep their
    binding structure.
    """

    def swap(name: str) -> str:
        return b if name == a else a if name == b else name

    match formula:
        case Top() | Bottom():
            return formula
        case Action(name=name, var=v):
            return Action(name, swap(v))
        case ProcPred(pool=pool, var=v):
            return ProcPred(pool, swap(v))
        case Eq(left=l, right=r):
            return Eq(swap(l), swap(r))
        case Less(left=l, right=r):
            return Less(swap(l), swap(r))
        case Succ(left=l, right=r):
            return Succ(swap(l), swap(r))
        case Sim(left=l, right=r):
            return Sim(swap(l), swap(r))
        case Not(body=body):
            return Not(swap_variables(body, a, b))
        case And(args=args):
            return And(tuple(swap_variables(arg, a, b) for arg in args))
        case Or(args=args):
            return Or(tuple(swap_variables(arg, a, b) for arg in args))
        case Exists(var=v, body=body):
            return Exists(swap(v), swap_variables(body, a, b))
        case Forall(var=v, body=body):
            return Forall(swap(v), swap_variables(body, a, b))
    raise TypeError(f"not a formula: {formula!r}")


def action_names(formula: Formula) -> frozenset[str]:
    return frozenset(node.name for node in formula.walk() if isinstance(node, Action))


def formula_size(formula: Formula) -> int:
    return sum(1 for _ in formula.walk())
