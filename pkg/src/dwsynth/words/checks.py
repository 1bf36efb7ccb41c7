from __future__ import annotations

from typing import Callable

from dwsynth.logic.ast import Signature
from dwsynth.words.word import DataWord, Move

# A System strategy is any function from a finite history to a letter or ε.
StrategyFn = Callable[[DataWord], Move]


def is_system_letter(word: DataWord, i: int, sig: Signature) -> bool:
    return word[i].action in sig.sys_actions


def check_compatibility(word: DataWord, strategy: StrategyFn, sig: Signature) -> bool:
    """Whether the finite execution `word` is compatible with `strategy`: every
    System position is what the strategy answers on the strict prefix before it,
    and the strategy has nothing left to play at the end.

    Args:
        word (DataWord): the finite execution.
        strategy (StrategyFn): System strategy, from histories to a letter or None.
        sig (Signature): tells System letters from Environment letters.
    """
    for i in range(len(word)):
        if is_system_letter(word, i, sig) and strategy(word[:i]) != word[i]:
            return False
    return strategy(word) is None


def pending_moves(word: DataWord, strategy: StrategyFn) -> list[bool]:
    "For each position i, whether the strategy wanted to move on the prefix before i."
    return [strategy(word[:i]) is not None for i in range(len(word))]


def check_fairness_window(
    word: DataWord, strategy: StrategyFn, sig: Signature, window: int
) -> bool:
    """False iff some `window` consecutive positions all have a pending System
    move and none of them is a System position.

    Args:
        word (DataWord): the finite execution.
        strategy (StrategyFn): System strategy the pending moves are read from.
        sig (Signature): tells System letters from Environment letters.
        window (int): longest run of Environment moves allowed is `window - 1`.
    """
    assert window >= 1, "the fairness window must be positive"
    pending = pending_moves(word, strategy)
    starved = 0
    for i, wanted in enumerate(pending):
        if wanted and not is_system_letter(word, i, sig):
            starved += 1
            if starved >= window:
                return False
        else:
            starved = 0
    return True
