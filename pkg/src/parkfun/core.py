"""Shared value types: parking preferences, permutations, friendship graphs
and parking outcomes.

Cars, spots and vertices are 1-indexed throughout. All types are immutable
after construction and safe to share between workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass(frozen=True)
class ParkingPreference:
    """A vector of preferred spots, one entry per car, each in [1, n].

    Any vector in [n]^n is allowed; actually *being* a parking function is a
    property tested by the parking operations, not a type invariant, so that
    the processes can run on failing inputs too.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        n = len(self.entries)
        if n == 0:
            raise ValueError("preference must have at least one entry")
        for idx, e in enumerate(self.entries, start=1):
            if not 1 <= e <= n:
                raise ValueError(f"entry {e} at position {idx} is outside [1, {n}]")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation.

    `word[k]` is the value in position k+1; as a parking outcome, position s
    holds the label of the car that ended up in spot s.
    """

    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        n = len(self.word)
        if n == 0:
            raise ValueError("permutation must be non-empty")
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"{self.word} is not a permutation of [1, {n}]")

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)


def identity_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def inverse_position(perm: Permutation, value: int) -> int:
    """Position (1-indexed) of `value` in the permutation word.

    >>> inverse_position(Permutation((2, 3, 1, 4)), 1)
    3
    """
    if not 1 <= value <= perm.n:
        raise ValueError(f"value {value} is outside [1, {perm.n}]")
    return perm.word.index(value) + 1


@dataclass(frozen=True)
class FriendshipGraph:
    """Simple undirected graph on vertex set [n].

    An edge {u, v} declares that cars u and v may occupy adjacent spots.
    Edges are stored canonically as (min, max) pairs; adjacency queries are
    O(1) via per-vertex neighbour sets.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    _neighbors: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        canonical = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            for w in (u, v):
                if not 1 <= w <= self.n:
                    raise ValueError(f"vertex {w} is outside [1, {self.n}]")
            canonical.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(canonical))
        nbr = [set() for _ in range(self.n + 1)]
        for u, v in canonical:
            nbr[u].add(v)
            nbr[v].add(u)
        object.__setattr__(self, "_neighbors", tuple(frozenset(s) for s in nbr))

    def adjacent(self, u: int, v: int) -> bool:
        for w in (u, v):
            if not 1 <= w <= self.n:
                raise ValueError(f"vertex {w} is outside [1, {self.n}]")
        return v in self._neighbors[u]

    def neighbors(self, v: int) -> frozenset[int]:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} is outside [1, {self.n}]")
        return self._neighbors[v]


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> FriendshipGraph:
    return FriendshipGraph(n, frozenset(tuple(e) for e in edges))


@dataclass(frozen=True)
class Success:
    """All cars parked: the outcome permutation plus per-car displacement."""

    outcome: Permutation
    displacement: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "displacement", tuple(self.displacement))
        if len(self.displacement) != self.outcome.n:
            raise ValueError("displacement length must match the outcome")
        if any(d < 0 for d in self.displacement):
            raise ValueError("displacements are non-negative")


@dataclass(frozen=True)
class Failure:
    """The first car that exited unable to park."""

    car: int


ParkOutcome = Success | Failure


def make_preference(entries: Iterable[int]) -> ParkingPreference:
    """Validated preference vector; every entry must lie in [1, len(entries)]."""
    return ParkingPreference(tuple(entries))


def graph_generator(family: str, size: int) -> FriendshipGraph:
    """Build a named graph family: "cycle", "complete" or "path".

    Cycles need size >= 3; the other families need size >= 1.
    """
    if family == "cycle":
        if size < 3:
            raise ValueError("cycle graphs need at least 3 vertices")
        edges = [(i, i + 1) for i in range(1, size)] + [(size, 1)]
        return make_graph(size, edges)
    if family == "complete":
        if size < 1:
            raise ValueError("complete graphs need at least 1 vertex")
        return make_graph(size, itertools.combinations(range(1, size + 1), 2))
    if family == "path":
        if size < 1:
            raise ValueError("path graphs need at least 1 vertex")
        return make_graph(size, ((i, i + 1) for i in range(1, size)))
    raise ValueError(f"unknown graph family {family!r}")


def parse_graph_text(text: str) -> FriendshipGraph:
    """Parse the plain-text graph format.

    First meaningful line is `n <count>`, then one edge per line as `u v`.
    Blank lines and lines starting with '#' are ignored.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected header 'n <count>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: vertex count {parts[1]!r} is not an integer") from None
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: edge endpoints must be integers, got {line!r}") from None
        edges.append((u, v))
    if n is None:
        raise ValueError("graph file has no 'n <count>' header")
    return make_graph(n, edges)


def all_labelled_graphs(n: int) -> Iterator[FriendshipGraph]:
    """Every labelled graph on [n]: all 2^C(n,2) edge subsets."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for r in range(len(pairs) + 1):
        for chosen in itertools.combinations(pairs, r):
            yield make_graph(n, chosen)
