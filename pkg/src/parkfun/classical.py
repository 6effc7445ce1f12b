"""The classical parking process.

Cars 1..n enter in order; car i drives to its preferred spot and parks in
the first unoccupied spot at or after it, or fails if none exists.
"""

from __future__ import annotations

from typing import Sequence

from .core import Failure, ParkingPreference, ParkOutcome, Permutation, Success


def _simulate(entries: Sequence[int], n: int) -> tuple[list[int], int]:
    """Run the process on a raw entry vector.

    Returns (spot_of_car, 0) on success, where spot_of_car is 1-indexed with
    a dummy cell 0, or ([], car) for the first car that cannot park.
    """
    occupied = [False] * (n + 1)
    spot_of_car = [0] * (n + 1)
    for car in range(1, n + 1):
        k = entries[car - 1]
        while k <= n and occupied[k]:
            k += 1
        if k > n:
            return [], car
        occupied[k] = True
        spot_of_car[car] = k
    return spot_of_car, 0


def classical_park(p: ParkingPreference) -> ParkOutcome:
    """Simulate the classical process for `p`.

    >>> classical_park(ParkingPreference((3, 1, 1, 2))).outcome.word
    (2, 3, 1, 4)
    """
    n = p.n
    spot_of_car, failed = _simulate(p.entries, n)
    if failed:
        return Failure(failed)
    word = [0] * n
    for car in range(1, n + 1):
        word[spot_of_car[car] - 1] = car
    displacement = tuple(spot_of_car[car] - p.entries[car - 1] for car in range(1, n + 1))
    return Success(Permutation(tuple(word)), displacement)


def is_parking_function(p: ParkingPreference) -> bool:
    """Membership via the non-decreasing rearrangement test.

    `p` parks all cars exactly when its sorted entries satisfy a_i <= i.
    Deliberately independent of the simulation so the two can cross-check.
    """
    return all(e <= i for i, e in enumerate(sorted(p.entries), start=1))


def total_displacement(outcome: ParkOutcome) -> int:
    """Sum of the displacement vector of a successful outcome."""
    if isinstance(outcome, Failure):
        raise ValueError(f"car {outcome.car} failed to park; no displacement is defined")
    return sum(outcome.displacement)
