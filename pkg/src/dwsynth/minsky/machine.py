"""Two-counter Minsky machines."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from dwsynth.logic.ast import IDENTIFIER, KEYWORDS

MachineError = type("MachineError", (ValueError,), {})
WrongSourceError = type("WrongSourceError", (ValueError,), {})
DecrementAtZeroError = type("DecrementAtZeroError", (ValueError,), {})
ZeroTestFailedError = type("ZeroTestFailedError", (ValueError,), {})

Kind = Literal["inc", "dec", "zero"]

# Letters of the reduction that machine states and transitions may not reuse.
RESERVED_NAMES = frozenset(
    {"inc0", "dec0", "inc1", "dec1", "noop", "oks", "kos", "oke", "koe"}
)


@dataclass(frozen=True)
class Transition:
    name: str
    source: str
    target: str
    kind: Kind
    counter: int

    def __post_init__(self):
        if self.kind not in ("inc", "dec", "zero"):
            raise MachineError(f"{self.name}: unknown kind {self.kind!r}")
        if self.counter not in (0, 1):
            raise MachineError(f"{self.name}: counter must be 0 or 1, got {self.counter}")

    @property
    def upkeep(self) -> str:
        "The letter System plays after this transition."
        return "noop" if self.kind == "zero" else f"{self.kind}{self.counter}"

    def __str__(self) -> str:
        return f"{self.name}: {self.source} -> {self.target} {self.kind} c{self.counter}"


@dataclass(frozen=True)
class MachineConfig:
    state: str
    v0: int = 0
    v1: int = 0

    def __post_init__(self):
        assert self.v0 >= 0 and self.v1 >= 0, "counters are nonnegative"

    def counter(self, i: int) -> int:
        return self.v0 if i == 0 else self.v1

    def __str__(self) -> str:
        return f"({self.state},{self.v0},{self.v1})"


@dataclass(frozen=True)
class MinskyMachine:
    states: tuple[str, ...]
    init: str
    halt: str
    transitions: tuple[Transition, ...]

    def __post_init__(self):
        if len(set(self.states)) != len(self.states):
            raise MachineError(f"duplicate states in {self.states}")
        for special in (self.init, self.halt):
            if special not in self.states:
                raise MachineError(f"{special!r} is not a declared state")
        names = [t.name for t in self.transitions]
        if len(set(names)) != len(names):
            raise MachineError(f"duplicate transition names in {names}")
        clash = set(names) & set(self.states)
        if clash:
            raise MachineError(f"names used for both states and transitions: {sorted(clash)}")
        for name in list(self.states) + names:
            if name in RESERVED_NAMES or name in KEYWORDS or not IDENTIFIER.fullmatch(name):
                raise MachineError(f"{name!r} cannot be used as a state or transition name")
        for t in self.transitions:
            for end in (t.source, t.target):
                if end not in self.states:
                    raise MachineError(f"{t.name}: unknown state {end!r}")

    @classmethod
    def of(
        cls,
        states: Iterable[str],
        init: str,
        halt: str,
        transitions: Iterable[tuple[str, str, str, Kind, int]],
    ) -> MinskyMachine:
        return cls(tuple(states), init, halt, tuple(Transition(*t) for t in transitions))

    def transition(self, name: str) -> Transition:
        for t in self.transitions:
            if t.name == name:
                return t
        raise MachineError(f"unknown transition {name!r}")

    def transitions_of(self, kind: Kind, counter: int) -> tuple[Transition, ...]:
        return tuple(t for t in self.transitions if t.kind == kind and t.counter == counter)

    @property
    def initial_config(self) -> MachineConfig:
        return MachineConfig(self.init)

    def step(self, cfg: MachineConfig, t: Transition | str) -> MachineConfig:
        """Fires `t` from `cfg`.

        Raises:
            WrongSourceError: `cfg` is not in the source state of `t`.
            DecrementAtZeroError: decrementing a counter at zero.
            ZeroTestFailedError: zero test on a non-zero counter.
        """
        if isinstance(t, str):
            t = self.transition(t)
        if t.source != cfg.state:
            raise WrongSourceError(f"{t.name} starts in {t.source}, not in {cfg.state}")
        values = [cfg.v0, cfg.v1]
        if t.kind == "inc":
            values[t.counter] += 1
        elif t.kind == "dec":
            if values[t.counter] == 0:
                raise DecrementAtZeroError(f"{t.name} decrements c{t.counter} at zero")
            values[t.counter] -= 1
        elif values[t.counter] != 0:
            raise ZeroTestFailedError(
                f"{t.name} tests c{t.counter} for zero, its value is {values[t.counter]}"
            )
        return MachineConfig(t.target, *values)


class InvalidRunError(ValueError):
    def __init__(self, message: str, index: int):
        super().__init__(f"step {index}: {message}")
        self.index = index


@dataclass(frozen=True)
class Run:
    transitions: tuple[Transition, ...]
    configs: tuple[MachineConfig, ...]  # one more than transitions
    halting: bool

    def __len__(self) -> int:
        return len(self.transitions)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(t.name for t in self.transitions)

    @property
    def final(self) -> MachineConfig:
        return self.configs[-1]


def run(machine: MinskyMachine, names: Sequence[str]) -> Run:
    """Replays a sequence of transition names from the initial configuration.

    Args:
        machine (MinskyMachine): the machine.
        names (Sequence[str]): transition names, in order.

    Returns:
        Run: the fired transitions with every configuration met, the initial one
        included.

    Raises:
        InvalidRunError: the first step that cannot be fired, with its index.
    """
    configs = [machine.initial_config]
    transitions = []
    for index, name in enumerate(names):
        try:
            t = machine.transition(name)
            configs.append(machine.step(configs[-1], t))
        except (MachineError, WrongSourceError, DecrementAtZeroError, ZeroTestFailedError) as e:
            raise InvalidRunError(str(e), index) from e
        transitions.append(t)
    return Run(tuple(transitions), tuple(configs), configs[-1].state == machine.halt)


def required_processes(run: Run) -> int:
    "System processes needed to play a run: one per increment, at least one."
    return max(1, sum(t.kind == "inc" for t in run.transitions))


def format_run(run: Run) -> str:
    status = "HALTED" if run.halting else "STOPPED"
    return f"{status} {run.final}"
