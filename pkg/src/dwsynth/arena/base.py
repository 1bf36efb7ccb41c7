from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Protocol

from dwsynth.words.word import DataWord, Move


class SystemStrategy(Protocol):
    """A deterministic function from a finite history to a System letter or ε.
    Strategies get no other input, so they cannot keep state between calls."""

    def __call__(self, history: DataWord) -> Move:
        ...


class EnvironmentPolicy(ABC):
    """Environment's side of a play: a function of the history, deterministic or
    seeded."""

    name: str = "policy"

    @abstractmethod
    def __call__(self, history: DataWord) -> Move:
        pass

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"
