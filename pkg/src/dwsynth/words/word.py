from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, NamedTuple, Optional, overload

from dwsynth.logic.ast import Signature

OwnershipError = type("OwnershipError", (ValueError,), {})


class Letter(NamedTuple):
    "One position of a data word: an action played on a process."

    action: str
    process: str

    def __str__(self) -> str:
        return f"{self.action}@{self.process}"

    @classmethod
    def parse(cls, text: str) -> Letter:
        action, sep, process = text.strip().partition("@")
        if not sep or not action or not process:
            raise ValueError(f"expected action@process, got {text!r}")
        return cls(action, process)


# A move is a letter or ε (None).
Move = Optional[Letter]


@dataclass(frozen=True)
class ProcessPools:
    """Processes owned by System (`sys`), by Environment (`env`) and shared (`mixed`).
    Order is kept: it fixes the order of process elements in a structure."""

    sys: tuple[str, ...] = ()
    env: tuple[str, ...] = ()
    mixed: tuple[str, ...] = ()

    def __post_init__(self):
        for name, pool in (("S", self.sys), ("E", self.env), ("M", self.mixed)):
            if len(set(pool)) != len(pool):
                raise ValueError(f"duplicate process in pool {name}: {pool}")
        shared = (
            (set(self.sys) & set(self.env))
            | (set(self.sys) & set(self.mixed))
            | (set(self.env) & set(self.mixed))
        )
        if shared:
            raise ValueError(f"pools must be pairwise disjoint, shared: {sorted(shared)}")

    @classmethod
    def of(cls, sys: Iterable = (), env: Iterable = (), mixed: Iterable = ()) -> ProcessPools:
        return cls(
            tuple(str(p) for p in sys),
            tuple(str(p) for p in env),
            tuple(str(p) for p in mixed),
        )

    @property
    def processes(self) -> tuple[str, ...]:
        return self.sys + self.env + self.mixed

    def __len__(self) -> int:
        return len(self.processes)

    def pool_of(self, process: str) -> Literal["S", "E", "M"]:
        if process in self.sys:
            return "S"
        if process in self.env:
            return "E"
        if process in self.mixed:
            return "M"
        raise KeyError(process)

    def playable_by(self, player: Literal["S", "E"]) -> tuple[str, ...]:
        return (self.sys if player == "S" else self.env) + self.mixed

    def __str__(self) -> str:
        return "pools " + " ".join(
            f"{name}={{{','.join(pool)}}}"
            for name, pool in (("S", self.sys), ("E", self.env), ("M", self.mixed))
        )


@dataclass(frozen=True)
class DataWord:
    "A finite data word."

    letters: tuple[Letter, ...] = field(default=())

    @classmethod
    def of(cls, letters: Iterable) -> DataWord:
        return cls(tuple(Letter(*letter) for letter in letters))

    @classmethod
    def parse(cls, text: str) -> DataWord:
        "Whitespace separated `action@process` items."
        return cls(tuple(Letter.parse(item) for item in text.split()))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    @overload
    def __getitem__(self, index: int) -> Letter:
        ...

    @overload
    def __getitem__(self, index: slice) -> DataWord:
        ...

    def __getitem__(self, index):
        if isinstance(index, slice):
            return DataWord(self.letters[index])
        return self.letters[index]

    def append(self, letter: Letter) -> DataWord:
        return DataWord(self.letters + (letter,))

    def extend(self, letters: Iterable[Letter]) -> DataWord:
        return DataWord(self.letters + tuple(letters))

    def actions(self) -> tuple[str, ...]:
        return tuple(letter.action for letter in self.letters)

    def processes(self) -> tuple[str, ...]:
        return tuple(letter.process for letter in self.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


def owner_of(letter: Letter, sig: Signature) -> Literal["S", "E"]:
    try:
        return sig.owner(letter.action)
    except KeyError:
        raise OwnershipError(f"action {letter.action!r} is not in the signature") from None


def check_letter(letter: Letter, pools: ProcessPools, sig: Optional[Signature]) -> None:
    """Raises OwnershipError if the letter's process is unknown, or, given a
    signature, if the process belongs to the opponent of the action's owner."""
    try:
        pool = pools.pool_of(letter.process)
    except KeyError:
        raise OwnershipError(f"{letter}: process {letter.process!r} is in no pool") from None
    if sig is None:
        return
    player = owner_of(letter, sig)
    if pool not in (player, "M"):
        raise OwnershipError(
            f"{letter}: {'System' if player == 'S' else 'Environment'} action "
            f"on a process of pool {pool}"
        )


def check_ownership(word: DataWord, pools: ProcessPools, sig: Optional[Signature]) -> None:
    for i, letter in enumerate(word):
        try:
            check_letter(letter, pools, sig)
        except OwnershipError as e:
            raise OwnershipError(f"position {i}: {e}") from None
