"""Counting the actions of a process with two variables.

With two variables one can say that the process of `x` carries at least one or
at least two positions labelled `a`, but not more. Larger counts are reached by
splitting a letter into two letters playing the same role and counting each of
them up to two.
"""

from __future__ import annotations

from dwsynth.logic.ast import (
    Action,
    And,
    Eq,
    Exists,
    Formula,
    Not,
    Sim,
    conjunction,
)

InvalidCountError = type("InvalidCountError", (ValueError,), {})


def _other(var: str) -> str:
    return "x" if var == "y" else "y"


def build_split_counting_formula(action: str, k: int, free_var: str = "x") -> Formula:
    """Formula with the single free variable `free_var`, true of an element whose
    process carries at least `k` positions labelled `action`.

    For k=2 this is `E y. y ~ x & a(y) & E x. x ~ y & !(x = y) & a(x)`.

    Raises:
        InvalidCountError: k is not 1 or 2; use `build_balanced_count_formula` for
            larger counts.
    """
    if k not in (1, 2):
        raise InvalidCountError(
            f"two variables count up to 2, got {k}; split the letter instead"
        )
    x, y = free_var, _other(free_var)
    if k == 1:
        return Exists(y, And((Sim(y, x), Action(action, y))))
    return Exists(
        y,
        And(
            (
                Sim(y, x),
                Action(action, y),
                Exists(x, And((Sim(x, y), Not(Eq(x, y)), Action(action, x)))),
            )
        ),
    )


def build_exactly_one_formula(action: str, free_var: str = "x") -> Formula:
    return And(
        (
            build_split_counting_formula(action, 1, free_var),
            Not(build_split_counting_formula(action, 2, free_var)),
        )
    )


def split_action_names(action: str) -> tuple[str, str]:
    return f"{action}_1", f"{action}_2"


def build_balanced_count_formula(action: str, n: int, free_var: str = "x") -> Formula:
    """At least `n` occurrences of the role `action`, for n in 1..4, when the role is
    played by the two letters of `split_action_names(action)` alternately
    (first copy first). Four occurrences are two of each copy.
    """
    if not 1 <= n <= 4:
        raise InvalidCountError(f"split letters count up to 4, got {n}")
    first, second = split_action_names(action)
    needed = ((first, (n + 1) // 2), (second, n // 2))
    return conjunction(
        *(
            build_split_counting_formula(name, k, free_var)
            for name, k in needed
            if k > 0
        )
    )
