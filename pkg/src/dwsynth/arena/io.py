from __future__ import annotations

from typing import Optional

from dwsynth.arena.scheduler import Play
from dwsynth.words.io import WordFile, format_word, parse_word_file
from dwsynth.words.word import ProcessPools


def format_trace(
    play: Play, pools: ProcessPools, policy: str, seed: Optional[int] = None
) -> str:
    "A data word file for the play, followed by its `# meta` block."
    meta = {"policy": policy, **play.meta}
    if seed is not None:
        meta["seed"] = str(seed)
    return format_word(play.word, pools, meta)


def parse_trace(text: str) -> WordFile:
    return parse_word_file(text)
