"""Cyclic parking functions and permutation components.

A preference is cyclic when its classical outcome is an increasing rotation
i, i+1, ..., n, 1, ..., i-1. These are counted by factorial sums, and they
biject onto permutation components: send a cyclic preference to the
component, in the permutation realising its displacement vector as an
inversion sequence, that contains the car parked in spot 1. Displacements
map to inversion numbers under this correspondence.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .classical import _simulate, classical_park
from .core import ParkingPreference, Permutation, Success
from .cycle import increasing_word
from .limits import ensure_within_cap
from .notation import format_word_compact


class NotCyclicPreference(ValueError):
    """The classical outcome of the preference is not an increasing rotation."""

    def __init__(self, message: str, outcome: tuple[int, ...] | None = None):
        super().__init__(message)
        self.outcome = outcome


@dataclass(frozen=True)
class InversionSequence:
    """Non-negative integers with entries[i] < i (1-indexed)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for idx, a in enumerate(self.entries, start=1):
            if not 0 <= a < idx:
                raise ValueError(f"entry {a} at position {idx} must lie in [0, {idx - 1}]")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)


@dataclass(frozen=True)
class Component:
    """A minimal block of a permutation occupying its own value interval.

    The subword at positions start..end is a permutation of the values
    start..end, and no proper prefix of it closes an interval of its own.
    Identity is the (underlying, start) pair: equal subwords inside
    different host permutations are distinct components.
    """

    underlying: Permutation
    start: int
    end: int

    def __post_init__(self):
        n = self.underlying.n
        if not 1 <= self.start <= self.end <= n:
            raise ValueError(f"positions {self.start}..{self.end} are outside [1, {n}]")
        sub = self.underlying.word[self.start - 1 : self.end]
        if sorted(sub) != list(range(self.start, self.end + 1)):
            raise ValueError(
                f"positions {self.start}..{self.end} of {self.underlying.word} "
                "do not hold exactly the values of that interval"
            )
        running = 0
        for pos, v in enumerate(sub[:-1], start=self.start):
            running = max(running, v)
            if running == pos:
                raise ValueError(
                    f"block {self.start}..{self.end} is not minimal: "
                    f"it closes already at position {pos}"
                )

    @property
    def word(self) -> tuple[int, ...]:
        return self.underlying.word[self.start - 1 : self.end]

    @property
    def size(self) -> int:
        return self.end - self.start + 1


def components(perm: Permutation) -> list[Component]:
    """Decompose a permutation into its components, left to right.

    Cut after position j whenever the running maximum equals j.

    >>> [c.word for c in components(Permutation((3, 1, 2, 4, 8, 6, 5, 7)))]
    [(3, 1, 2), (4,), (8, 6, 5, 7)]
    """
    out = []
    start = 1
    running = 0
    for j, v in enumerate(perm.word, start=1):
        running = max(running, v)
        if running == j:
            out.append(Component(perm, start, j))
            start = j + 1
    return out


def inversion_number(value: int, perm: Permutation) -> int:
    """How many smaller values appear after `value` in the word."""
    if not 1 <= value <= perm.n:
        raise ValueError(f"value {value} is outside [1, {perm.n}]")
    pos = perm.word.index(value)
    return sum(1 for x in perm.word[pos + 1 :] if x < value)


def inv_seq(perm: Permutation) -> InversionSequence:
    """Per-value inversion counts, as a sequence indexed by value.

    >>> inv_seq(Permutation((4, 1, 5, 3, 2))).entries
    (0, 0, 1, 3, 2)
    """
    counts = [0] * (perm.n + 1)
    # Scan right to left: everything already seen lies to the right.
    seen: list[int] = []
    for v in reversed(perm.word):
        counts[v] = sum(1 for x in seen if x < v)
        seen.append(v)
    return InversionSequence(tuple(counts[1:]))


def perm_from_inv_seq(a: InversionSequence | Sequence[int]) -> Permutation:
    """The unique permutation whose inversion counts equal `a`.

    Built by inserting the values 1..n in turn, each with its count of
    letters to its right.

    >>> perm_from_inv_seq((0, 0, 1, 3, 2)).word
    (4, 1, 5, 3, 2)
    """
    if not isinstance(a, InversionSequence):
        a = InversionSequence(tuple(a))
    word: list[int] = []
    for value, count in enumerate(a.entries, start=1):
        word.insert(len(word) - count, value)
    return Permutation(tuple(word))


def is_cyclic_pf(p: ParkingPreference) -> int | None:
    """Starting value i when the classical outcome is the increasing rotation
    from i; None when the process fails or parks in any other pattern."""
    res = classical_park(p)
    if not isinstance(res, Success):
        return None
    word = res.outcome.word
    i = word[0]
    return i if word == increasing_word(i, p.n) else None


def cyclic_fibre_size(start: int, n: int) -> int:
    """Number of preferences whose classical outcome is the increasing
    rotation from `start`: (n+1-start)! * (start-1)!."""
    if not 1 <= start <= n:
        raise ValueError(f"start {start} is outside [1, {n}]")
    return factorial(n + 1 - start) * factorial(start - 1)


def cyclic_total_count(n: int) -> int:
    """Total number of cyclic parking functions: sum of i!(n-i)!."""
    if n < 1:
        raise ValueError("need n >= 1")
    return sum(factorial(i) * factorial(n - i) for i in range(n))


def psi(p: ParkingPreference) -> Component:
    """Map a cyclic preference to its permutation component.

    Runs the classical process, realises the displacement vector as an
    inversion sequence, and returns the component of the resulting
    permutation containing the starting value (the car in spot 1).
    The simulation is redone internally so preference and displacement can
    never disagree.
    """
    res = classical_park(p)
    if not isinstance(res, Success):
        raise NotCyclicPreference(f"car {res.car} cannot park; not a parking function")
    word = res.outcome.word
    i = word[0]
    if word != increasing_word(i, p.n):
        raise NotCyclicPreference(
            f"outcome {format_word_compact(word)} is not an increasing cycle",
            outcome=word,
        )
    host = perm_from_inv_seq(res.displacement)
    for c in components(host):
        if c.start <= i <= c.end:
            return c
    raise AssertionError("components always cover every value")


def psi_inverse(c: Component) -> ParkingPreference:
    """The unique cyclic preference mapping to component `c`.

    Car j ends up in the spot that value j occupies in the increasing
    rotation from i = min value of the component; its preference is that
    spot minus its inversion number in the host permutation.
    """
    host = c.underlying
    n = host.n
    i = c.start
    counts = inv_seq(host).entries
    entries = []
    for j in range(1, n + 1):
        spot = n + j + 1 - i if j < i else j + 1 - i
        entries.append(spot - counts[j - 1])
    return ParkingPreference(tuple(entries))


def enumerate_cyclic_pf(n: int, *, force: bool = False) -> Iterator[ParkingPreference]:
    """All cyclic parking functions of length n, lexicographically.

    Exhaustive sweep over [n]^n, subject to the brute-force cap.
    """
    ensure_within_cap(n ** n, force)
    for entries in itertools.product(range(1, n + 1), repeat=n):
        spot_of_car, failed = _simulate(entries, n)
        if failed:
            continue
        i = spot_of_car.index(1)  # car parked in spot 1
        target = increasing_word(i, n)
        if all(spot_of_car[target[s]] == s + 1 for s in range(n)):
            yield ParkingPreference(entries)


def _cyclic_shard(payload) -> int:
    n, first = payload
    count = 0
    for rest in itertools.product(range(1, n + 1), repeat=n - 1):
        entries = (first, *rest)
        spot_of_car, failed = _simulate(entries, n)
        if failed:
            continue
        i = spot_of_car.index(1)
        target = increasing_word(i, n)
        if all(spot_of_car[target[s]] == s + 1 for s in range(n)):
            count += 1
    return count


def count_cyclic_brute(n: int, *, force: bool = False, workers: int = 1) -> int:
    """Number of cyclic parking functions by exhaustive simulation."""
    ensure_within_cap(n ** n, force)
    if workers <= 1:
        return sum(1 for _ in enumerate_cyclic_pf(n, force=True))
    payloads = [(n, first) for first in range(1, n + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_cyclic_shard, payloads))
