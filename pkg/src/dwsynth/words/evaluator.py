from __future__ import annotations

from typing import Mapping, Optional, Union

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
    free_variables,
)
from dwsynth.logic.parser import UnboundVariableError
from dwsynth.words.structure import WordStructure

Assignment = Mapping[str, int]


def _check_bound(formula: Formula, env: Assignment) -> None:
    unbound = free_variables(formula) - set(env)
    if unbound:
        raise UnboundVariableError(f"no value for free variables {sorted(unbound)}")


def evaluate(
    formula: Formula, structure: WordStructure, env: Optional[Assignment] = None
) -> bool:
    """Tarskian truth value of `formula` in `structure` under `env`.

    Args:
        formula: the formula to evaluate.
        structure: the structure of a data word.
        env: values (element indices) of the free variables.

    Raises:
        UnboundVariableError: a free variable of `formula` has no value in `env`.
    """
    env = dict(env or {})
    _check_bound(formula, env)
    return _evaluate(formula, structure, env)


def _evaluate(formula: Formula, s: WordStructure, env: dict[str, int]) -> bool:
    match formula:
        case Top():
            return True
        case Bottom():
            return False
        case Action(name=name, var=v):
            return s.has_action(name, env[v])
        case ProcPred(pool=pool, var=v):
            return s.in_pool(pool, env[v])
        case Eq(left=a, right=b):
            return env[a] == env[b]
        case Less(left=a, right=b):
            return s.less(env[a], env[b])
        case Succ(left=a, right=b):
            return s.succ(env[a], env[b])
        case Sim(left=a, right=b):
            return s.sim(env[a], env[b])
        case Not(body=body):
            return not _evaluate(body, s, env)
        case And(args=args):
            return all(_evaluate(arg, s, env) for arg in args)
        case Or(args=args):
            return any(_evaluate(arg, s, env) for arg in args)
        case Exists(var=v, body=body) | Forall(var=v, body=body):
            universal = isinstance(formula, Forall)
            saved = env.get(v)
            result = universal
            for e in s.elements:
                env[v] = e
                if _evaluate(body, s, env) != universal:
                    result = not universal
                    break
            if saved is None:
                env.pop(v, None)
            else:
                env[v] = saved
            return result
    raise TypeError(f"not a formula: {formula!r}")


# Ground terms: ("const", bool) | ("fact", fact) | ("not", g) | ("and", [g]) | ("or", [g])
Ground = tuple


def ground(formula: Formula, structure: WordStructure, env: Assignment) -> Ground:
    """Expands every quantifier into a conjunction or disjunction over all elements.
    Atoms become facts to be looked up in the structure's diagram."""
    match formula:
        case Top():
            return ("const", True)
        case Bottom():
            return ("const", False)
        case Action(name=name, var=v):
            return ("fact", ("action", name, env[v]))
        case ProcPred(pool=pool, var=v):
            return ("fact", ("proc", pool, env[v]))
        case Eq(left=a, right=b):
            return ("fact", ("=", env[a], env[b]))
        case Less(left=a, right=b):
            return ("fact", ("<", env[a], env[b]))
        case Succ(left=a, right=b):
            return ("fact", ("+1", env[a], env[b]))
        case Sim(left=a, right=b):
            return ("fact", ("~", env[a], env[b]))
        case Not(body=body):
            return ("not", ground(body, structure, env))
        case And(args=args):
            return ("and", [ground(arg, structure, env) for arg in args])
        case Or(args=args):
            return ("or", [ground(arg, structure, env) for arg in args])
        case Exists(var=v, body=body):
            return (
                "or",
                [ground(body, structure, {**env, v: e}) for e in structure.elements],
            )
        case Forall(var=v, body=body):
            return (
                "and",
                [ground(body, structure, {**env, v: e}) for e in structure.elements],
            )
    raise TypeError(f"not a formula: {formula!r}")


def evaluate_ground(term: Ground, facts: Union[set, frozenset]) -> bool:
    kind, payload = term
    if kind == "const":
        return payload
    if kind == "fact":
        return payload in facts
    if kind == "not":
        return not evaluate_ground(payload, facts)
    values = [evaluate_ground(child, facts) for child in payload]
    return all(values) if kind == "and" else any(values)


def evaluate_grounded(
    formula: Formula, structure: WordStructure, env: Optional[Assignment] = None
) -> bool:
    """Same contract as `evaluate`, computed by full grounding against the
    structure's diagram. Exponential in quantifier depth: meant as an oracle on
    small structures."""
    env = dict(env or {})
    _check_bound(formula, env)
    return evaluate_ground(ground(formula, structure, env), structure.facts())
