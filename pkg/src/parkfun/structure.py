"""Structural analysis of friendship outcomes.

Successful friendship outcomes are exactly the Hamiltonian paths of the
graph. For a Hamiltonian path, the set of preferences mapping onto it is a
box: car i may prefer precisely the spots covered by the maximal run of
"blockers" ending at i. This module enumerates Hamiltonian paths, computes
blocking runs, and turns them into fibre sets, sizes and totals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterator

from .core import FriendshipGraph, ParkingPreference, Permutation, inverse_position, make_graph


class NotHamiltonianPath(ValueError):
    """The permutation is not a Hamiltonian path of the graph."""


@dataclass(frozen=True)
class BlockingSequence:
    """Maximal contiguous run of blockers ending at the target value."""

    elements: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements or self.elements[-1] != self.target:
            raise ValueError("blocking sequence must end at its target")

    @property
    def length(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class FibreCharacterisation:
    """Per-car admissible spot intervals for one Hamiltonian outcome.

    `spot_sets[i-1]` is the inclusive (lo, hi) interval of spots car i may
    prefer; hi is always the spot where car i ends up.
    """

    outcome: Permutation
    spot_sets: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "spot_sets", tuple(tuple(s) for s in self.spot_sets))
        if len(self.spot_sets) != self.outcome.n:
            raise ValueError("need exactly one spot interval per car")

    def spots(self, car: int) -> range:
        """The admissible spots of `car` as a range."""
        lo, hi = self.spot_sets[car - 1]
        return range(lo, hi + 1)


def is_hamiltonian_path(perm: Permutation, graph: FriendshipGraph) -> bool:
    """Do consecutive word entries always form edges of the graph?"""
    if perm.n != graph.n:
        return False
    word = perm.word
    return all(graph.adjacent(word[k], word[k + 1]) for k in range(len(word) - 1))


def hamiltonian_paths(graph: FriendshipGraph) -> Iterator[Permutation]:
    """Every Hamiltonian path of the graph, in lexicographic word order.

    Depth-first backtracking, extending partial paths by ascending vertex
    label; for the single-vertex graph the trivial path is yielded.
    """
    n = graph.n
    ordered = [()] + [tuple(sorted(graph.neighbors(v))) for v in range(1, n + 1)]
    used = [False] * (n + 1)
    path: list[int] = []

    def extend(v: int) -> Iterator[Permutation]:
        path.append(v)
        used[v] = True
        if len(path) == n:
            yield Permutation(tuple(path))
        else:
            for w in ordered[v]:
                if not used[w]:
                    yield from extend(w)
        path.pop()
        used[v] = False

    for start in range(1, n + 1):
        yield from extend(start)


def has_hamiltonian_path(graph: FriendshipGraph) -> bool:
    """Short-circuits on the first path found."""
    return next(hamiltonian_paths(graph), None) is not None


def is_blocker(j: int, i: int, perm: Permutation, graph: FriendshipGraph) -> bool:
    """Does the value j obstruct car i in this outcome?

    j blocks i when j <= i, or when j > i but sits next to some value
    smaller than i that is not a friend of i: car i can then never use
    j's spot, because a hostile earlier car guards it.
    """
    for v in (j, i):
        if not 1 <= v <= perm.n:
            raise ValueError(f"value {v} is outside [1, {perm.n}]")
    if j <= i:
        return True
    word = perm.word
    k = word.index(j)
    for kn in (k - 1, k + 1):
        if 0 <= kn < len(word):
            ell = word[kn]
            if ell < i and not graph.adjacent(ell, i):
                return True
    return False


def blocking_sequence(i: int, perm: Permutation, graph: FriendshipGraph) -> BlockingSequence:
    """Scan left from i's position while the blocker predicate holds."""
    word = perm.word
    end = inverse_position(perm, i) - 1
    start = end
    while start > 0 and is_blocker(word[start - 1], i, perm, graph):
        start -= 1
    return BlockingSequence(word[start : end + 1], i)


def fibre_characterisation(perm: Permutation, graph: FriendshipGraph) -> FibreCharacterisation:
    """Admissible spot intervals for every car of a Hamiltonian outcome.

    Rejects permutations that are not Hamiltonian paths of the graph; the
    characterisation only holds for those.
    """
    if not is_hamiltonian_path(perm, graph):
        raise NotHamiltonianPath(
            f"{perm.word} is not a Hamiltonian path of the graph"
        )
    sets = []
    for i in range(1, perm.n + 1):
        run = blocking_sequence(i, perm, graph)
        hi = inverse_position(perm, i)
        sets.append((hi - run.length + 1, hi))
    return FibreCharacterisation(perm, tuple(sets))


def fibre_size(perm: Permutation, graph: FriendshipGraph) -> int:
    """Number of preferences whose friendship outcome is `perm`."""
    chi = fibre_characterisation(perm, graph)
    return prod(hi - lo + 1 for lo, hi in chi.spot_sets)


def enumerate_fibre(perm: Permutation, graph: FriendshipGraph) -> Iterator[ParkingPreference]:
    """All preferences with `perm` as friendship outcome, lexicographically."""
    chi = fibre_characterisation(perm, graph)
    ranges = [range(lo, hi + 1) for lo, hi in chi.spot_sets]
    for entries in itertools.product(*ranges):
        yield ParkingPreference(entries)


def total_fpf_count(graph: FriendshipGraph) -> int:
    """Total number of friendship parking functions: fibre sizes summed over
    all Hamiltonian paths (zero when the graph has none)."""
    return sum(fibre_size(pi, graph) for pi in hamiltonian_paths(graph))


# 8-vertex example graph used in the worked fibre computation: a spanning
# path 8-7-1-5-2-4-6-3 plus the chords 8-4, 4-3, 3-2, 2-8.
_FIG4_EDGES = (
    (8, 7), (7, 1), (1, 5), (5, 2), (2, 4), (4, 6), (6, 3),
    (8, 4), (4, 3), (3, 2), (2, 8),
)


def fig4_graph() -> FriendshipGraph:
    """Built-in 8-vertex example graph (CLI name "fig4")."""
    return make_graph(8, _FIG4_EDGES)
