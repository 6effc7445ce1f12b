"""Closed forms for the cycle graph.

The Hamiltonian paths of the cycle graph are the rotations read forwards
(increasing) or backwards (decreasing) from some starting value. Their
fibre sizes, and hence the total count of cycle friendship parking
functions, have closed forms; the three-vertex cycle needs one replacement
in the decreasing case because there every pair of vertices is adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import factorial
from typing import Iterator

from .core import Permutation


class Direction(Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


@dataclass(frozen=True)
class CyclicOutcome:
    """A rotation outcome on the cycle graph: direction, starting value, size."""

    direction: Direction
    start: int
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("cycle outcomes need n >= 3")
        if not 1 <= self.start <= self.n:
            raise ValueError(f"start {self.start} is outside [1, {self.n}]")


def increasing_word(start: int, n: int) -> tuple[int, ...]:
    """start, start+1, ..., n, 1, ..., start-1 (defined for any n >= 1)."""
    if not 1 <= start <= n:
        raise ValueError(f"start {start} is outside [1, {n}]")
    return tuple(range(start, n + 1)) + tuple(range(1, start))


def decreasing_word(start: int, n: int) -> tuple[int, ...]:
    """start, start-1, ..., 1, n, n-1, ..., start+1."""
    if not 1 <= start <= n:
        raise ValueError(f"start {start} is outside [1, {n}]")
    return tuple(range(start, 0, -1)) + tuple(range(n, start, -1))


def expand_cyclic(c: CyclicOutcome) -> Permutation:
    """The explicit one-line permutation of a rotation outcome."""
    if c.direction is Direction.INCREASING:
        return Permutation(increasing_word(c.start, c.n))
    return Permutation(decreasing_word(c.start, c.n))


def cyclic_outcomes(n: int) -> Iterator[CyclicOutcome]:
    """All 2n rotation outcomes: increasing then decreasing, by start."""
    if n < 3:
        raise ValueError("cycle outcomes need n >= 3")
    for direction in (Direction.INCREASING, Direction.DECREASING):
        for start in range(1, n + 1):
            yield CyclicOutcome(direction, start, n)


def _exact_div3(value: int) -> int:
    # i! for i >= 4 is always divisible by 3; guard against transcription slips.
    if value % 3:
        raise ArithmeticError(f"{value} is not divisible by 3")
    return value // 3


def cycle_fibre_size(c: CyclicOutcome) -> int:
    """Closed-form fibre size of a rotation outcome on the cycle graph."""
    n, i = c.n, c.start
    if c.direction is Direction.DECREASING:
        if i == n:
            return 1
        if i == n - 1:
            return n
        # i <= n-2; on three vertices the largest value never blocks, which
        # drops one factor from the product.
        if n == 3:
            return i + 1
        return (i + 1) * (i + 2)
    if i <= 3:
        return factorial(n + 1 - i) * factorial(i - 1)
    return _exact_div3(factorial(n - i + 1) * factorial(i))


def cycle_total_count(n: int) -> int:
    """Total number of friendship parking functions on the n-vertex cycle.

    Evaluates the closed-form sum over all rotation outcomes; exact integer
    arithmetic throughout.
    """
    if n < 3:
        raise ValueError("the cycle graph needs n >= 3")
    total = n + 1
    if n == 3:
        total += sum(i + 1 for i in range(1, n - 1))
    else:
        total += sum((i + 1) * (i + 2) for i in range(1, n - 1))
    total += sum(factorial(n + 1 - i) * factorial(i - 1) for i in range(1, 4))
    total += sum(_exact_div3(factorial(n - i + 1) * factorial(i)) for i in range(4, n + 1))
    return total
