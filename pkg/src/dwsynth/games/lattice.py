from __future__ import annotations

import itertools
from functools import cache, cached_property

import torch
from einops import rearrange
from gymnasium.spaces import Discrete
from torchtyping import TensorType

from dwsynth.games.spec import Location

# Typing
TensorLong = TensorType["batch_shape", torch.long]
LocationsTensor = TensorType["n_locations", "dim", torch.long]
ReachabilityTensor = TensorType["n_locations", "n_locations", torch.bool]
PotentialTensor = TensorType["n_locations", torch.long]
CountsTensor = TensorType["n_locations", torch.long]
MaskTensor = TensorType["n_locations", torch.bool]

NonValidActionsError = type("NonValidActionsError", (ValueError,), {})


class LocationLattice:
    def __init__(self, dim: int, bound: int):
        """The locations of one player: vectors of length `dim` with values in
        {0, 1, ..., bound}, ordered componentwise.

        A unit move adds one to a single component; action `i < dim` increments
        component `i` and the last action (`dim`) stays put.

        Args:
            dim (int): number of letters of the player.
            bound (int): the bound B of the game.
        """
        assert dim >= 0 and bound >= 0, "dimension and bound must be nonnegative"
        self.dim = dim
        self.bound = bound
        self.action_space = Discrete(dim + 1)

    @property
    def origin(self) -> Location:
        return (0,) * self.dim

    @property
    def n_locations(self) -> int:
        return (self.bound + 1) ** self.dim

    def is_stay_action(self, action: int) -> bool:
        return action == self.action_space.n - 1

    def step(self, loc: Location, action: int) -> Location:
        if not self.action_space.contains(action):
            raise NonValidActionsError(f"unknown action {action}")
        if self.is_stay_action(action):
            return loc
        if loc[action] >= self.bound:
            raise NonValidActionsError(
                f"component {action} of {loc} is already at the bound {self.bound}"
            )
        return loc[:action] + (loc[action] + 1,) + loc[action + 1 :]

    def successors(self, loc: Location) -> list[Location]:
        "Locations one unit step above `loc`."
        return [
            self.step(loc, i) for i in range(self.dim) if loc[i] < self.bound
        ]

    def up(self, loc: Location) -> list[Location]:
        "Every location reachable from `loc`, `loc` first, in lexicographic order."
        return list(itertools.product(*(range(v, self.bound + 1) for v in loc)))

    def potential(self, loc: Location) -> int:
        "Number of unit moves left from `loc`."
        return sum(self.bound - v for v in loc)

    def index(self, loc: Location) -> int:
        index = 0
        for v in loc:
            index = index * (self.bound + 1) + v
        return index

    def get_locations_indices(self, locations: LocationsTensor) -> TensorLong:
        canonical_base = (self.bound + 1) ** torch.arange(self.dim - 1, -1, -1)
        return (canonical_base * locations).sum(-1).long()

    def build_grid(self) -> torch.Tensor:
        "Tensor of shape (B+1, ..., B+1, dim) holding each location at its coordinates."
        axes = [torch.arange(self.bound + 1)] * self.dim
        return torch.stack(torch.meshgrid(*axes, indexing="ij"), dim=-1)

    @cached_property
    def all_locations(self) -> LocationsTensor:
        if self.dim == 0:
            return torch.zeros((1, 0), dtype=torch.long)
        return rearrange(self.build_grid(), "... dim -> (...) dim").long()

    def locations(self) -> list[Location]:
        "All locations, in index order."
        return [tuple(row) for row in self.all_locations.tolist()]

    @cached_property
    def reachability(self) -> ReachabilityTensor:
        "`reachability[i, j]` iff location j is reachable from location i."
        locs = self.all_locations
        return (locs[None, :, :] >= locs[:, None, :]).all(-1)

    @cached_property
    def potentials(self) -> PotentialTensor:
        return (self.bound - self.all_locations).sum(-1)

    def counts_vector(self, pebbles: dict[Location, int]) -> CountsTensor:
        counts = torch.zeros(self.n_locations, dtype=torch.long)
        for loc, n in pebbles.items():
            counts[self.index(loc)] = n
        return counts

    def upward_sums(self, pebbles: dict[Location, int]) -> CountsTensor:
        "For each location, the number of pebbles on locations reachable from it."
        return self.reachability.long() @ self.counts_vector(pebbles)

    def thresholds(self, K: int) -> CountsTensor:
        "K·(dim+1)^potential at every location."
        return K * torch.pow(self.dim + 1, self.potentials)

    def p_mask(self, pebbles: dict[Location, int], K: int) -> MaskTensor:
        """Locations where the pebbles above reach the threshold.

        Args:
            pebbles: pebble count per location.
            K: the largest constant of the victory condition.

        Returns:
            MaskTensor: `mask[i]` iff at least `K·(dim+1)^potential` pebbles lie on
            locations reachable from location i.
        """
        return self.upward_sums(pebbles) >= self.thresholds(K)


@cache
def lattice_of(dim: int, bound: int) -> LocationLattice:
    "Shared lattice, so that its tensors are built once per game."
    return LocationLattice(dim, bound)


def reachable(source: Location, target: Location) -> bool:
    """Whether a pebble at `source` may move to `target`.

    Raises:
        ValueError: the two locations have different dimensions.
    """
    if len(source) != len(target):
        raise ValueError(f"dimension mismatch between {source} and {target}")
    return all(t >= s for s, t in zip(source, target))
