from __future__ import annotations

from collections import deque
from typing import Optional

from dwsynth.minsky.machine import (
    DecrementAtZeroError,
    MachineConfig,
    MinskyMachine,
    Run,
    ZeroTestFailedError,
    run,
)


def bounded_halting_search(machine: MinskyMachine, max_steps: int) -> Optional[Run]:
    """A shortest halting run of at most `max_steps` transitions, or None.

    Breadth-first over configurations; counters never exceed `max_steps` within
    that many steps, so the visited set stays finite.

    Args:
        machine (MinskyMachine): the machine to run from its initial configuration.
        max_steps (int): longest run considered.

    Returns:
        Optional[Run]: a halting run, None if none has at most `max_steps` steps.
    """
    assert max_steps >= 0, "max_steps must be nonnegative"
    start = machine.initial_config
    parents: dict[MachineConfig, tuple[Optional[MachineConfig], Optional[str]]] = {
        start: (None, None)
    }
    queue = deque([(start, 0)])
    while queue:
        cfg, depth = queue.popleft()
        if cfg.state == machine.halt:
            names = []
            node: Optional[MachineConfig] = cfg
            while node is not None:
                node, name = parents[node]
                if name is not None:
                    names.append(name)
            return run(machine, names[::-1])
        if depth == max_steps:
            continue
        for t in machine.transitions:
            if t.source != cfg.state:
                continue
            try:
                child = machine.step(cfg, t)
            except (DecrementAtZeroError, ZeroTestFailedError):
                continue
            if child not in parents:
                parents[child] = (cfg, t.name)
                queue.append((child, depth + 1))
    return None
