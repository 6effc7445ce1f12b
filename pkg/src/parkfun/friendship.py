"""The friendship parking process.

Cars follow the classical rules, but a spot only counts as available when
each occupied neighbouring spot holds a car adjacent to the arriving car in
the friendship graph. The boundary spots 0 and n+1 are treated as
permanently unoccupied.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .core import (
    Failure,
    FriendshipGraph,
    ParkingPreference,
    ParkOutcome,
    Permutation,
    Success,
    make_graph,
)
from .limits import ensure_within_cap


@dataclass(frozen=True)
class LotState:
    """Occupancy snapshot of the car park: cell s-1 holds the car in spot s, or None."""

    occupancy: tuple[int | None, ...]

    def __post_init__(self):
        object.__setattr__(self, "occupancy", tuple(self.occupancy))
        cars = [c for c in self.occupancy if c is not None]
        if any(c < 1 for c in cars):
            raise ValueError("car labels are positive")
        if len(cars) != len(set(cars)):
            raise ValueError("a car may occupy at most one spot")

    @property
    def n(self) -> int:
        return len(self.occupancy)

    @classmethod
    def empty(cls, n: int) -> "LotState":
        return cls((None,) * n)

    @classmethod
    def with_cars(cls, n: int, cars_at: Mapping[int, int]) -> "LotState":
        """Build a state from a {spot: car} mapping."""
        cells: list[int | None] = [None] * n
        for spot, car in cars_at.items():
            if not 1 <= spot <= n:
                raise ValueError(f"spot {spot} is outside [1, {n}]")
            cells[spot - 1] = car
        return cls(tuple(cells))

    def car_at(self, spot: int) -> int | None:
        if not 1 <= spot <= self.n:
            raise ValueError(f"spot {spot} is outside [1, {self.n}]")
        return self.occupancy[spot - 1]

    def place(self, spot: int, car: int) -> "LotState":
        if self.car_at(spot) is not None:
            raise ValueError(f"spot {spot} is already occupied")
        cells = list(self.occupancy)
        cells[spot - 1] = car
        return LotState(tuple(cells))


def _padded(state: LotState) -> list[int]:
    """Occupancy as a 0-sentinel int list with virtual empty spots 0 and n+1."""
    return [0] + [c or 0 for c in state.occupancy] + [0]


def _spot_available(occ: Sequence[int], neighbors_of_car, spot: int) -> bool:
    # occ is padded: index 0 and n+1 are the always-empty boundary spots.
    if occ[spot]:
        return False
    left, right = occ[spot - 1], occ[spot + 1]
    if left and left not in neighbors_of_car:
        return False
    if right and right not in neighbors_of_car:
        return False
    return True


def is_available(state: LotState, graph: FriendshipGraph, car: int, spot: int) -> bool:
    """Can `car` park in `spot` given the current occupancy?

    True iff the spot is unoccupied and each occupied neighbouring spot holds
    a friend of `car`.
    """
    if not 1 <= spot <= state.n:
        raise ValueError(f"spot {spot} is outside [1, {state.n}]")
    return _spot_available(_padded(state), graph.neighbors(car), spot)


def _run(entries: Sequence[int], n: int, neighbor_sets) -> tuple[list[int], int]:
    """Raw simulation; mirrors classical._simulate but with availability."""
    occ = [0] * (n + 2)
    spot_of_car = [0] * (n + 1)
    for car in range(1, n + 1):
        friends = neighbor_sets[car]
        k = entries[car - 1]
        placed = False
        while k <= n:
            if not occ[k]:
                left, right = occ[k - 1], occ[k + 1]
                if (not left or left in friends) and (not right or right in friends):
                    occ[k] = car
                    spot_of_car[car] = k
                    placed = True
                    break
            k += 1
        if not placed:
            return [], car
    return spot_of_car, 0


def friendship_park(p: ParkingPreference, graph: FriendshipGraph) -> ParkOutcome:
    """Simulate the friendship process for `p` on `graph`."""
    n = p.n
    if graph.n != n:
        raise ValueError(f"preference has {n} cars but the graph has {graph.n} vertices")
    spot_of_car, failed = _run(p.entries, n, graph._neighbors)
    if failed:
        return Failure(failed)
    word = [0] * n
    for car in range(1, n + 1):
        word[spot_of_car[car] - 1] = car
    displacement = tuple(spot_of_car[car] - p.entries[car - 1] for car in range(1, n + 1))
    return Success(Permutation(tuple(word)), displacement)


def is_friendship_pf(p: ParkingPreference, graph: FriendshipGraph) -> bool:
    return isinstance(friendship_park(p, graph), Success)


def _graph_payload(graph: FriendshipGraph) -> tuple[int, tuple[tuple[int, int], ...]]:
    return graph.n, tuple(sorted(graph.edges))


def _fpf_shard(payload) -> list[tuple[int, ...]]:
    """Worker: all passing preferences with a fixed first entry, in lex order."""
    n, edges, first = payload
    nbr = make_graph(n, edges)._neighbors
    found = []
    for rest in itertools.product(range(1, n + 1), repeat=n - 1):
        entries = (first, *rest)
        if not _run(entries, n, nbr)[1]:
            found.append(entries)
    return found


def enumerate_fpf(
    graph: FriendshipGraph, *, force: bool = False, workers: int = 1
) -> Iterator[ParkingPreference]:
    """All friendship parking functions for `graph`, lexicographically.

    Brute-force sweep over [n]^n, refused above the configured cap unless
    `force` is set. With workers > 1 the sweep is sharded by first entry and
    merged back in order, so the stream is identical for any worker count.
    """
    n = graph.n
    ensure_within_cap(n ** n, force)
    if workers <= 1:
        nbr = graph._neighbors
        for entries in itertools.product(range(1, n + 1), repeat=n):
            if not _run(entries, n, nbr)[1]:
                yield ParkingPreference(entries)
        return
    gn, edges = _graph_payload(graph)
    payloads = [(gn, edges, first) for first in range(1, n + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for shard in pool.map(_fpf_shard, payloads):
            for entries in shard:
                yield ParkingPreference(entries)


def count_fpf_brute(
    graph: FriendshipGraph, *, force: bool = False, workers: int = 1
) -> int:
    """Number of friendship parking functions, by exhaustive simulation."""
    n = graph.n
    ensure_within_cap(n ** n, force)
    if workers <= 1:
        nbr = graph._neighbors
        return sum(
            1
            for entries in itertools.product(range(1, n + 1), repeat=n)
            if not _run(entries, n, nbr)[1]
        )
    gn, edges = _graph_payload(graph)
    payloads = [(gn, edges, first) for first in range(1, n + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(len(shard) for shard in pool.map(_fpf_shard, payloads))


def brute_fibre_counts(
    graph: FriendshipGraph, *, force: bool = False
) -> dict[tuple[int, ...], int]:
    """Outcome word -> number of preferences reaching it, by one full sweep."""
    n = graph.n
    ensure_within_cap(n ** n, force)
    nbr = graph._neighbors
    counts: dict[tuple[int, ...], int] = {}
    for entries in itertools.product(range(1, n + 1), repeat=n):
        spot_of_car, failed = _run(entries, n, nbr)
        if failed:
            continue
        word = [0] * n
        for car in range(1, n + 1):
            word[spot_of_car[car] - 1] = car
        key = tuple(word)
        counts[key] = counts.get(key, 0) + 1
    return counts
