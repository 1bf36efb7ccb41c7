from __future__ import annotations

from dataclasses import dataclass

from dwsynth.logic.ast import Eq, Formula, Less, Sim, Succ, variables


@dataclass(frozen=True)
class FragmentProfile:
    variable_names: frozenset[str]
    uses_order: bool
    uses_succ: bool
    uses_sim: bool
    uses_eq: bool

    @property
    def n_variables(self) -> int:
        return len(self.variable_names)

    @property
    def two_variable(self) -> bool:
        return self.n_variables <= 2

    @property
    def predicates(self) -> tuple[str, ...]:
        "Binary predicates that occur, in the order ~, <, +1, =."
        flags = (
            ("~", self.uses_sim),
            ("<", self.uses_order),
            ("+1", self.uses_succ),
            ("=", self.uses_eq),
        )
        return tuple(name for name, used in flags if used)

    @property
    def fragment_label(self) -> str:
        "e.g. `FO2[~,<]`; formulas with fewer than two variables are reported as FO2."
        names = [p for p in self.predicates if p != "="]
        suffix = f"[{','.join(names)}]" if names else ""
        return f"FO{max(2, self.n_variables)}{suffix}"


def classify_fragment(formula: Formula) -> FragmentProfile:
    nodes = list(formula.walk())
    return FragmentProfile(
        variable_names=variables(formula),
        uses_order=any(isinstance(node, Less) for node in nodes),
        uses_succ=any(isinstance(node, Succ) for node in nodes),
        uses_sim=any(isinstance(node, Sim) for node in nodes),
        uses_eq=any(isinstance(node, Eq) for node in nodes),
    )
