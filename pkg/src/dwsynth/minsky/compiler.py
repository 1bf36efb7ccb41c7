"""Compiling a Minsky machine into a two-variable specification over `~` and `<`.

System encodes a run of the machine as a data word made of patterns
`state transition upkeep oks`, each acknowledged by an Environment `oke`. The
counter i is the number of System processes carrying `inc_i` and no `dec_i`.
A player who notices a cheat of the other one plays a `ko`; the specification
holds iff Environment misplayed or System honestly reached the halting state.

Every formula below uses the variables x and y only. Formulas with a free `x`
expect it to be the last `oke` of the word.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, fields

from dwsynth.logic.ast import (
    Action,
    Eq,
    Exists,
    Forall,
    Formula,
    Less,
    Not,
    Sim,
    Signature,
    Top,
    conjunction,
    disjunction,
    implies,
)
from dwsynth.minsky.machine import MinskyMachine

SYS_CONTROL = ("inc0", "dec0", "inc1", "dec1", "noop", "oks", "kos")
ENV_LETTERS = ("oke", "koe")


def reduction_signature(machine: MinskyMachine) -> Signature:
    return Signature.of(
        SYS_CONTROL + machine.states + tuple(t.name for t in machine.transitions),
        ENV_LETTERS,
    )


def other(v: str) -> str:
    return "y" if v == "x" else "x"


def any_of(names, v: str) -> Formula:
    return disjunction(*(Action(name, v) for name in names))


def exists_after(v: str, body) -> Formula:
    "∃w > v. body(w), with w the other variable."
    w = other(v)
    return Exists(w, conjunction(Less(v, w), body(w)))


def exists_before(v: str, body) -> Formula:
    w = other(v)
    return Exists(w, conjunction(Less(w, v), body(w)))


def forall_after(v: str, body) -> Formula:
    w = other(v)
    return Forall(w, implies(Less(v, w), body(w)))


class MacroPredicates:
    "The unary macros of the reduction, for one machine."

    def __init__(self, machine: MinskyMachine):
        self.machine = machine
        self.sig = reduction_signature(machine)

    def is_state(self, v: str) -> Formula:
        return any_of(self.machine.states, v)

    def is_trans(self, v: str) -> Formula:
        return any_of([t.name for t in self.machine.transitions], v)

    def is_trans_of(self, kind: str, i: int, v: str) -> Formula:
        return any_of([t.name for t in self.machine.transitions_of(kind, i)], v)

    def is_upkeep(self, v: str) -> Formula:
        return any_of(("noop", "inc0", "dec0", "inc1", "dec1"), v)

    def is_sys(self, v: str) -> Formula:
        return any_of(sorted(self.sig.sys_actions), v)

    def is_env(self, v: str) -> Formula:
        return any_of(ENV_LETTERS, v)

    def is_position(self, v: str) -> Formula:
        return disjunction(self.is_sys(v), self.is_env(v))

    # First, second and last position. `body` must only hold on positions.

    def at_first(self, body) -> Formula:
        return Exists("x", conjunction(body("x"), Not(Exists("y", Less("y", "x")))))

    def at_second(self, body) -> Formula:
        second = conjunction(
            Exists("y", Less("y", "x")),
            Not(Exists("y", conjunction(Less("y", "x"), Exists("x", Less("x", "y"))))),
        )
        return Exists("x", conjunction(body("x"), second))

    def at_last(self, body) -> Formula:
        return Exists("x", conjunction(body("x"), Not(Exists("y", Less("x", "y")))))

    def not_last(self, v: str) -> Formula:
        "`v ≠ last`: some position is last and differs from v."
        w = other(v)
        return Exists(
            w,
            conjunction(
                self.is_position(w), Not(Exists(v, Less(w, v))), Not(Eq(v, w))
            ),
        )


@dataclass(frozen=True)
class ReductionFormulas:
    """Every named part of the compiled specification.

    Attributes:
        kos_justified: Environment misplayed since System's last `oks`.
        koe_justified: System cheated since Environment's last `oke`.
        bad_sequence: the letters of the current pattern are out of order.
        bad_target: the state played is not the target of the previous transition.
        bad_source: the transition played does not start in the state played.
        bad_upkeep: wrong upkeep letter, double inc, double dec or dec without inc.
        bad_zero_test: a zero test while the counter is not zero.
        env_prefix / sys_prefix: the word does not start with `oks` then `oke`.
        env_blocks / sys_blocks: the word ends while the player had to move.
        env_plays_after_ko / sys_plays_after_ko: a player moved after a ko.
        phi: the specification.
    """

    kos_justified: Formula
    koe_justified: Formula
    bad_sequence: Formula
    bad_target: Formula
    bad_source: Formula
    bad_upkeep: Formula
    bad_zero_test: Formula
    env_prefix: Formula
    sys_prefix: Formula
    env_blocks: Formula
    sys_blocks: Formula
    env_plays_after_ko: Formula
    sys_plays_after_ko: Formula
    phi: Formula

    def named(self) -> dict[str, Formula]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


class MachineCompiler(ABC):
    """Compiles a machine into a specification such that System wins the synthesis
    game iff the machine halts."""

    @abstractmethod
    def compile(self, machine: MinskyMachine) -> ReductionFormulas:
        pass


class OrderCompiler(MachineCompiler):
    """The reduction over `~` and `<`.

    With `literal=True` three subformulas follow their printed form instead of the
    intended one: the second `oke` of `kos_justified` is read as `oke(y)` and may be
    replaced by the absence of a later `oks`, the last
    transition of `bad_target` is looked up outside its quantifier, and the
    decrement of `bad_zero_test` is read on x.
    """

    def __init__(self, literal: bool = False):
        """
        Args:
            literal (bool, optional): compile the printed form of the three
                subformulas. Defaults to False.
        """
        self.literal = literal

    def compile(self, machine: MinskyMachine) -> ReductionFormulas:
        m = MacroPredicates(machine)
        bad_sequence = self.bad_sequence(m)
        bad_target = self.bad_target(m)
        bad_source = self.bad_source(m)
        bad_upkeep = self.bad_upkeep(m)
        bad_zero_test = self.bad_zero_test(m)
        kos_justified = self.kos_justified()
        koe_justified = Exists(
            "x",
            conjunction(
                Action("oke", "x"),
                forall_after("x", lambda y: Not(Action("oke", y))),
                disjunction(bad_sequence, bad_target, bad_source, bad_upkeep, bad_zero_test),
            ),
        )

        env_prefix = disjunction(
            m.at_first(m.is_env),
            m.at_second(lambda v: conjunction(m.is_env(v), Not(Action("oke", v)))),
        )
        sys_prefix = disjunction(
            m.at_first(lambda v: conjunction(m.is_sys(v), Not(Action("oks", v)))),
            m.at_second(m.is_sys),
        )
        env_blocks = m.at_last(lambda v: Action("oks", v))
        sys_blocks = disjunction(
            Not(Exists("x", Top())),
            m.at_last(lambda v: Action("koe", v)),
            m.at_last(lambda v: conjunction(m.is_state(v), Not(Action(machine.halt, v)))),
            m.at_last(m.is_trans),
            m.at_last(m.is_upkeep),
        )
        some_ko_before_last = Exists(
            "x", conjunction(m.not_last("x"), any_of(("koe", "kos"), "x"))
        )
        env_plays_after_ko = conjunction(m.at_last(m.is_env), some_ko_before_last)
        sys_plays_after_ko = conjunction(m.at_last(m.is_sys), some_ko_before_last)

        phi = disjunction(
            env_prefix,
            env_blocks,
            env_plays_after_ko,
            conjunction(Exists("x", Action("kos", "x")), kos_justified),
            conjunction(
                Not(sys_prefix),
                Not(sys_blocks),
                Not(sys_plays_after_ko),
                Not(conjunction(Exists("x", Action("koe", "x")), koe_justified)),
                m.at_last(lambda v: Action(machine.halt, v)),
            ),
        )
        return ReductionFormulas(
            kos_justified=kos_justified,
            koe_justified=koe_justified,
            bad_sequence=bad_sequence,
            bad_target=bad_target,
            bad_source=bad_source,
            bad_upkeep=bad_upkeep,
            bad_zero_test=bad_zero_test,
            env_prefix=env_prefix,
            sys_prefix=sys_prefix,
            env_blocks=env_blocks,
            sys_blocks=sys_blocks,
            env_plays_after_ko=env_plays_after_ko,
            sys_plays_after_ko=sys_plays_after_ko,
            phi=phi,
        )

    def kos_justified(self) -> Formula:
        """Two `oke` after the last `oks`.

        The literal variant also accepts "no `oks` after x", which holds whenever x
        is the last `oks`: there a single `oke` justifies `kos`.
        """
        if self.literal:
            second_oke = disjunction(
                Exists("x", conjunction(Less("y", "x"), Action("oke", "y"))),
                Not(exists_after("x", lambda y: Action("oks", y))),
            )
        else:
            second_oke = exists_after("y", lambda x: Action("oke", x))
        return Exists(
            "x",
            conjunction(
                Action("oks", "x"),
                forall_after("x", lambda y: Not(Action("oks", y))),
                Exists(
                    "y",
                    conjunction(
                        Less("x", "y"),
                        Action("oke", "y"),
                        second_oke,
                    ),
                ),
            ),
        )

    def bad_sequence(self, m: MacroPredicates) -> Formula:
        def followed_by(first, later) -> Formula:
            return conjunction(first("y"), exists_after("y", later))

        out_of_order = exists_after(
            "x",
            lambda y: disjunction(
                followed_by(m.is_state, m.is_state),
                followed_by(m.is_trans, lambda v: disjunction(m.is_state(v), m.is_trans(v))),
                followed_by(
                    m.is_upkeep,
                    lambda v: disjunction(m.is_state(v), m.is_trans(v), m.is_upkeep(v)),
                ),
                followed_by(lambda v: Action("oks", v), m.is_sys),
            ),
        )
        return disjunction(
            out_of_order,
            conjunction(exists_after("x", m.is_sys), Not(exists_after("x", m.is_state))),
            conjunction(
                exists_after("x", lambda y: disjunction(m.is_upkeep(y), Action("oks", y))),
                Not(exists_after("x", m.is_trans)),
            ),
            conjunction(
                exists_after("x", lambda y: Action("oks", y)),
                Not(exists_after("x", m.is_upkeep)),
            ),
        )

    def bad_target(self, m: MacroPredicates) -> Formula:
        machine = m.machine
        no_trans_yet = Not(exists_after("x", m.is_trans))
        cases = []
        for q in machine.states:
            wrong = [t.name for t in machine.transitions if t.target != q]
            last_trans = forall_after("x", lambda y: Not(m.is_trans(y)))
            if self.literal:
                previous = conjunction(Exists("x", last_trans), any_of(wrong, "x"))
            else:
                previous = Exists("x", conjunction(last_trans, any_of(wrong, "x")))
            cases.append(conjunction(exists_after("x", lambda y: Action(q, y)), previous))
        not_initial = [q for q in machine.states if q != machine.init]
        return disjunction(
            conjunction(no_trans_yet, disjunction(*cases)),
            conjunction(
                Not(Exists("y", m.is_trans("y"))),
                disjunction(*(Exists("y", Action(q, "y")) for q in not_initial)),
            ),
        )

    def bad_source(self, m: MacroPredicates) -> Formula:
        machine = m.machine
        return disjunction(
            *(
                conjunction(
                    exists_after("x", lambda y: Action(q, y)),
                    exists_after("x", lambda y: Action(t.name, y)),
                )
                for q in machine.states
                for t in machine.transitions
                if t.source != q
            )
        )

    def bad_upkeep(self, m: MacroPredicates) -> Formula:
        machine = m.machine
        lines = []
        for i in (0, 1):
            inc, dec = f"inc{i}", f"dec{i}"
            for kind, expected in (("inc", inc), ("dec", dec), ("zero", "noop")):
                if not machine.transitions_of(kind, i):
                    continue
                lines.append(
                    conjunction(
                        exists_after("x", lambda y: m.is_trans_of(kind, i, y)),
                        exists_after(
                            "x",
                            lambda y: conjunction(m.is_upkeep(y), Not(Action(expected, y))),
                        ),
                    )
                )

            def earlier_on_same_process(letter: str) -> Formula:
                return exists_before(
                    "y", lambda x: conjunction(Sim(x, "y"), Action(letter, x))
                )

            lines.append(
                exists_after(
                    "x", lambda y: conjunction(Action(inc, y), earlier_on_same_process(inc))
                )
            )
            lines.append(
                exists_after(
                    "x", lambda y: conjunction(Action(dec, y), earlier_on_same_process(dec))
                )
            )
            lines.append(
                exists_after(
                    "x",
                    lambda y: conjunction(Action(dec, y), Not(earlier_on_same_process(inc))),
                )
            )
        return disjunction(*lines)

    def bad_zero_test(self, m: MacroPredicates) -> Formula:
        machine = m.machine
        cases = []
        for i in (0, 1):
            if not machine.transitions_of("zero", i):
                continue
            dec_var = "x" if self.literal else "y"
            pending_inc = Exists(
                "x",
                conjunction(
                    Action(f"inc{i}", "x"),
                    Not(Exists("y", conjunction(Sim("y", "x"), Action(f"dec{i}", dec_var)))),
                ),
            )
            cases.append(
                conjunction(
                    exists_after("x", lambda y: m.is_trans_of("zero", i, y)), pending_inc
                )
            )
        return disjunction(*cases)


def compile_to_fo2_ord(machine: MinskyMachine, literal: bool = False) -> Formula:
    "The specification for `machine`; see `OrderCompiler`."
    return OrderCompiler(literal).compile(machine).phi
