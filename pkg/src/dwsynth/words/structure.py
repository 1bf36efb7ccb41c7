from __future__ import annotations

from typing import Literal, Optional

import torch
from torchtyping import TensorType

from dwsynth.logic.ast import Signature
from dwsynth.words.word import DataWord, ProcessPools, check_ownership

# Typing
RelationTensor = TensorType["n_elements", "n_elements", torch.bool]
Fact = tuple


class WordStructure:
    """A data word seen as a logical structure.

    Elements `0 .. n-1` are the positions of the word, followed by one element per
    process of the pools (idle processes included). `<` and `+1` only relate
    positions; `~` relates a position to the positions of the same process and to
    that process's element, and a process element only to itself and its
    positions. Each position satisfies exactly one action predicate, each
    process element exactly one of ProcS/ProcE/ProcM.
    """

    def __init__(self, word: DataWord, pools: ProcessPools):
        self.word = word
        self.pools = pools
        self.n_positions = len(word)
        self.processes = pools.processes
        self.size = self.n_positions + len(self.processes)

        process_element = {p: self.n_positions + i for i, p in enumerate(self.processes)}
        self.labels: tuple[Optional[str], ...] = word.actions() + (None,) * len(
            self.processes
        )
        self.process_of: tuple[int, ...] = tuple(
            process_element[letter.process] for letter in word
        ) + tuple(process_element[p] for p in self.processes)
        self.pool_of: tuple[Optional[str], ...] = (None,) * self.n_positions + tuple(
            pools.pool_of(p) for p in self.processes
        )

    @property
    def elements(self) -> range:
        return range(self.size)

    def is_position(self, e: int) -> bool:
        return e < self.n_positions

    def has_action(self, name: str, e: int) -> bool:
        return self.labels[e] == name

    def in_pool(self, pool: Literal["S", "E", "M"], e: int) -> bool:
        return self.pool_of[e] == pool

    def less(self, a: int, b: int) -> bool:
        return a < b < self.n_positions

    def succ(self, a: int, b: int) -> bool:
        "a = b + 1"
        return a < self.n_positions and a == b + 1

    def sim(self, a: int, b: int) -> bool:
        return self.process_of[a] == self.process_of[b]

    def element_name(self, e: int) -> str:
        if self.is_position(e):
            return f"{e}:{self.word[e]}"
        return f"proc {self.processes[e - self.n_positions]}"

    def facts(self) -> frozenset[Fact]:
        """The positive diagram: every true atomic fact over elements, as tuples
        `(predicate, *elements)`."""
        facts: set[Fact] = set()
        for e in self.elements:
            facts.add(("=", e, e))
            label = self.labels[e]
            if label is not None:
                facts.add(("action", label, e))
            pool = self.pool_of[e]
            if pool is not None:
                facts.add(("proc", pool, e))
        for name, relation in self.relation_tensors().items():
            facts.update((name, a, b) for a, b in relation.nonzero().tolist())
        return frozenset(facts)

    def relation_tensors(self) -> dict[str, RelationTensor]:
        "`<`, `+1` and `~` as boolean matrices over all elements."
        index = torch.arange(self.size)
        position = index < self.n_positions
        both = position[:, None] & position[None, :]
        process_of = torch.tensor(self.process_of, dtype=torch.long)
        return {
            "<": both & (index[:, None] < index[None, :]),
            "+1": both & (index[:, None] == index[None, :] + 1),
            "~": process_of[:, None] == process_of[None, :],
        }

    def __repr__(self) -> str:
        return (
            f"WordStructure({self.n_positions} positions, "
            f"{len(self.processes)} processes)"
        )


def to_structure(
    word: DataWord, pools: ProcessPools, sig: Optional[Signature] = None
) -> WordStructure:
    """Materializes a data word with its process pools.

    Raises:
        OwnershipError: a position on a process in no pool, or, given `sig`, an
            action played on a process of the opponent's pool.
    """
    check_ownership(word, pools, sig)
    return WordStructure(word, pools)
