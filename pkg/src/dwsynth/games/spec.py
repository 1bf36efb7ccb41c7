"""Parametrised vector games.

Each player owns a set of letters. A location of a player is a vector of counts,
one per letter of that player, each between 0 and the bound B. Pebbles sit on
locations and only move upwards (componentwise). System wins a finished play iff
the final configuration satisfies one of the acceptance conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Mapping

InvalidGameError = type("InvalidGameError", (ValueError,), {})

Player = Literal["S", "E"]
Location = tuple[int, ...]

PLAYER_NAMES: dict[str, str] = {"S": "System", "E": "Environment"}


def opponent(player: Player) -> Player:
    return "E" if player == "S" else "S"


@dataclass(frozen=True)
class Constraint:
    "`= n` or `>= n` on the number of pebbles at a location."

    op: Literal["=", ">="]
    n: int

    def __post_init__(self):
        if self.op not in ("=", ">="):
            raise InvalidGameError(f"unknown constraint {self.op!r}")
        if self.n < 0:
            raise InvalidGameError(f"constraint constant must be nonnegative, got {self.n}")

    def holds(self, count: int) -> bool:
        return count == self.n if self.op == "=" else count >= self.n

    def __str__(self) -> str:
        return f"{self.op} {self.n}"


@dataclass(frozen=True)
class AcceptanceCondition:
    """Constraints on some locations of either player; locations that are not
    mentioned are unconstrained (`>= 0`)."""

    sys_constraints: tuple[tuple[Location, Constraint], ...] = ()
    env_constraints: tuple[tuple[Location, Constraint], ...] = ()

    @classmethod
    def of(
        cls,
        sys: Mapping[Location, Constraint] | None = None,
        env: Mapping[Location, Constraint] | None = None,
    ) -> AcceptanceCondition:
        return cls(
            tuple(sorted((tuple(l), c) for l, c in (sys or {}).items())),
            tuple(sorted((tuple(l), c) for l, c in (env or {}).items())),
        )

    def constraints(self, player: Player) -> tuple[tuple[Location, Constraint], ...]:
        return self.sys_constraints if player == "S" else self.env_constraints

    @property
    def constants(self) -> list[int]:
        return [c.n for _, c in self.sys_constraints + self.env_constraints]

    def __str__(self) -> str:
        parts = [
            f"{player}<{','.join(map(str, loc))}> {c}"
            for player in ("S", "E")
            for loc, c in self.constraints(player)
        ]
        return " & ".join(parts) if parts else "(all >= 0)"


@dataclass(frozen=True)
class GameSpec:
    sys_letters: tuple[str, ...]
    env_letters: tuple[str, ...]
    bound: int
    victory: tuple[AcceptanceCondition, ...] = ()

    def __post_init__(self):
        shared = set(self.sys_letters) & set(self.env_letters)
        if shared:
            raise InvalidGameError(f"letters owned by both players: {sorted(shared)}")
        for letters in (self.sys_letters, self.env_letters):
            if len(set(letters)) != len(letters):
                raise InvalidGameError(f"duplicate letters in {letters}")
        if self.bound < 0:
            raise InvalidGameError(f"bound must be nonnegative, got {self.bound}")
        for condition in self.victory:
            for player in ("S", "E"):
                for loc, _ in condition.constraints(player):
                    self.check_location(loc, player)

    @classmethod
    def of(
        cls,
        sys_letters: Iterable[str],
        env_letters: Iterable[str],
        bound: int,
        victory: Iterable[AcceptanceCondition] = (),
    ) -> GameSpec:
        return cls(tuple(sys_letters), tuple(env_letters), bound, tuple(victory))

    def letters(self, player: Player) -> tuple[str, ...]:
        return self.sys_letters if player == "S" else self.env_letters

    def dim(self, player: Player) -> int:
        return len(self.letters(player))

    @property
    def d(self) -> int:
        "Number of Environment letters."
        return len(self.env_letters)

    @property
    def K(self) -> int:
        "Largest constant of the victory condition, 0 if there is none."
        return max((n for c in self.victory for n in c.constants), default=0)

    def origin(self, player: Player) -> Location:
        return (0,) * self.dim(player)

    def check_location(self, loc: Location, player: Player) -> None:
        if len(loc) != self.dim(player):
            raise InvalidGameError(
                f"{PLAYER_NAMES[player]} location {loc} should have "
                f"{self.dim(player)} components"
            )
        if any(not 0 <= v <= self.bound for v in loc):
            raise InvalidGameError(f"location {loc} is outside [0, {self.bound}]")
