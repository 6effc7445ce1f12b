"""Cross-verification suites.

Every suite pits an exhaustive brute-force oracle (simulate all of [n]^n,
or scan all of S_n) against the structural characterisations and closed
forms, and reports one pass/fail line per check.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from . import cyclic as cyc
from .classical import classical_park, is_parking_function
from .core import (
    FriendshipGraph,
    ParkingPreference,
    Permutation,
    Success,
    all_labelled_graphs,
    graph_generator,
    make_graph,
)
from .cycle import (
    CyclicOutcome,
    Direction,
    cycle_fibre_size,
    cycle_total_count,
    cyclic_outcomes,
    decreasing_word,
    expand_cyclic,
    increasing_word,
)
from .friendship import _run, friendship_park, is_friendship_pf
from .limits import ensure_within_cap
from .structure import (
    blocking_sequence,
    enumerate_fibre,
    fibre_size,
    hamiltonian_paths,
    has_hamiltonian_path,
    is_hamiltonian_path,
    total_fpf_count,
)

SUITE_NAMES = ("props", "table1", "cycle", "bijection", "all")

DEFAULT_RANGES = {
    "props": range(1, 5),
    "cycle": range(3, 7),
    "bijection": range(1, 6),
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _brute_fibres(graph: FriendshipGraph) -> dict[tuple[int, ...], set[tuple[int, ...]]]:
    """Outcome word -> set of preferences reaching it, by full simulation."""
    n = graph.n
    nbr = graph._neighbors
    fibres: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
    for entries in itertools.product(range(1, n + 1), repeat=n):
        spot_of_car, failed = _run(entries, n, nbr)
        if failed:
            continue
        word = [0] * n
        for car in range(1, n + 1):
            word[spot_of_car[car] - 1] = car
        fibres.setdefault(tuple(word), set()).add(entries)
    return fibres


def _graph_corpus(n: int) -> tuple[list[FriendshipGraph], str]:
    """All labelled graphs for n <= 4; a seeded sample plus the named
    families for larger n."""
    if n <= 4:
        graphs = list(all_labelled_graphs(n))
        return graphs, f"all {len(graphs)} labelled graphs"
    rng = random.Random(2024 + n)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    graphs = [
        graph_generator("complete", n),
        graph_generator("path", n),
        graph_generator("cycle", n),
    ]
    for _ in range(16):
        graphs.append(make_graph(n, [e for e in pairs if rng.random() < 0.5]))
    return graphs, f"{len(graphs)} sampled graphs"


def props_suite(n_values: Iterable[int], *, force: bool = False) -> list[CheckResult]:
    """Containment, Hamiltonian-path equivalence, outcome transfer and the
    fibre-box partition, against brute force on a graph corpus."""
    results = []
    for n in n_values:
        graphs, corpus_note = _graph_corpus(n)
        ensure_within_cap(len(graphs) * n ** n, force)
        subset_bad: list[str] = []
        nonempty_bad: list[str] = []
        transfer_bad: list[str] = []
        partition_bad: list[str] = []
        for graph in graphs:
            fibres = _brute_fibres(graph)
            fpf_set = set().union(*fibres.values()) if fibres else set()

            for entries in fpf_set:
                if not is_parking_function(ParkingPreference(entries)):
                    subset_bad.append(f"{entries} on {sorted(graph.edges)}")

            brute_nonempty = bool(fpf_set)
            if brute_nonempty != has_hamiltonian_path(graph) or brute_nonempty != (
                total_fpf_count(graph) > 0
            ):
                nonempty_bad.append(f"{sorted(graph.edges)}")

            for entries in itertools.product(range(1, n + 1), repeat=n):
                res = classical_park(ParkingPreference(entries))
                if isinstance(res, Success) and is_hamiltonian_path(res.outcome, graph):
                    fres = friendship_park(ParkingPreference(entries), graph)
                    if not isinstance(fres, Success) or fres.outcome != res.outcome:
                        transfer_bad.append(f"{entries} on {sorted(graph.edges)}")

            seen: set[tuple[int, ...]] = set()
            for pi in hamiltonian_paths(graph):
                box = {p.entries for p in enumerate_fibre(pi, graph)}
                if box != fibres.get(pi.word, set()):
                    partition_bad.append(f"fibre of {pi.word} on {sorted(graph.edges)}")
                if box & seen:
                    partition_bad.append(f"overlap at {pi.word} on {sorted(graph.edges)}")
                seen |= box
            if seen != fpf_set:
                partition_bad.append(f"union mismatch on {sorted(graph.edges)}")

        def summary(bad: list[str]) -> tuple[bool, str]:
            if bad:
                return False, f"{len(bad)} discrepancies, first: {bad[0]}"
            return True, f"{corpus_note}, {n ** n} preferences each"

        for check, bad in (
            (f"friendship-implies-classical n={n}", subset_bad),
            (f"nonempty-iff-hamiltonian n={n}", nonempty_bad),
            (f"classical-hamiltonian-outcome-transfers n={n}", transfer_bad),
            (f"fibre-box-partition n={n}", partition_bad),
        ):
            ok, detail = summary(bad)
            results.append(CheckResult(check, ok, detail))

        if n >= 4:
            cn = graph_generator("cycle", n)
            witness = None
            for entries in itertools.product(range(1, n + 1), repeat=n):
                p = ParkingPreference(entries)
                if not is_friendship_pf(p, cn):
                    continue
                res = classical_park(p)
                if not (isinstance(res, Success) and is_hamiltonian_path(res.outcome, cn)):
                    witness = entries
                    break
            results.append(
                CheckResult(
                    f"friendship-beyond-hamiltonian-outcomes C_{n}",
                    witness is not None,
                    f"witness {witness}" if witness else "no witness found",
                )
            )
    return results


def _expected_blocking_words(c: CyclicOutcome) -> dict[int, tuple[int, ...]]:
    """The piecewise closed-form blocking runs for a rotation outcome, n >= 4."""
    n, i = c.n, c.start
    expected: dict[int, tuple[int, ...]] = {}
    if c.direction is Direction.DECREASING:
        if i <= n - 2:
            for j in range(1, n - 1):
                expected[j] = (j,)
            expected[n - 1] = tuple(range(i, 0, -1)) + (n, n - 1)
            expected[n] = tuple(range(i, 0, -1)) + (n,)
        elif i == n - 1:
            for j in range(1, n):
                expected[j] = (j,)
            expected[n] = decreasing_word(n - 1, n)
        else:
            for j in range(1, n + 1):
                expected[j] = (j,)
    else:
        for j in range(i, n + 1):
            expected[j] = tuple(range(i, j + 1))
        if i >= 4:
            expected[1] = (1,)
            expected[2] = (1, 2)
            for j in range(3, i):
                expected[j] = (n,) + tuple(range(1, j + 1))
        else:
            for j in range(1, i):
                expected[j] = tuple(range(1, j + 1))
    return expected


def cycle_suite(n_values: Iterable[int], *, force: bool = False) -> list[CheckResult]:
    """Cycle-graph closed forms against the general fibre product and brute force."""
    from .friendship import brute_fibre_counts

    results = []
    for n in n_values:
        if n < 3:
            continue
        cn = graph_generator("cycle", n)

        paths = list(hamiltonian_paths(cn))
        expansions = {expand_cyclic(c).word for c in cyclic_outcomes(n)}
        ok = len(paths) == 2 * n and {p.word for p in paths} == expansions
        results.append(
            CheckResult(
                f"cycle-hamiltonian-paths n={n}",
                ok,
                f"{len(paths)} paths == 2n rotations",
            )
        )

        ensure_within_cap(n ** n, force)
        brute = brute_fibre_counts(cn, force=True)

        formula = cycle_total_count(n)
        brute_total = sum(brute.values())
        results.append(
            CheckResult(
                f"cycle-count-closed-form n={n}",
                formula == brute_total,
                f"formula {formula} vs brute {brute_total}",
            )
        )

        bad = []
        for c in cyclic_outcomes(n):
            word = expand_cyclic(c).word
            closed = cycle_fibre_size(c)
            general = fibre_size(Permutation(word), cn)
            counted = brute.get(word, 0)
            if not closed == general == counted:
                bad.append(f"{word}: closed {closed}, product {general}, brute {counted}")
        results.append(
            CheckResult(
                f"cycle-fibre-closed-forms n={n}",
                not bad,
                bad[0] if bad else f"all {2 * n} rotation fibres agree",
            )
        )

        if n >= 4:
            bad = []
            for c in cyclic_outcomes(n):
                pi = expand_cyclic(c)
                for j, want in _expected_blocking_words(c).items():
                    got = blocking_sequence(j, pi, cn).elements
                    if got != want:
                        bad.append(f"run for {j} in {pi.word}: {got} != {want}")
            results.append(
                CheckResult(
                    f"cycle-blocking-run-shapes n={n}",
                    not bad,
                    bad[0] if bad else f"all runs match on {2 * n} rotations",
                )
            )
        else:
            pi = Permutation(decreasing_word(1, 3))
            run = blocking_sequence(2, pi, cn).elements
            size = fibre_size(pi, cn)
            ok = run == (2,) and size == 2
            results.append(
                CheckResult(
                    "three-cycle-replacement",
                    ok,
                    f"run for 2 in 132 is {run}, fibre size {size}",
                )
            )
    return results


def bijection_suite(n_values: Iterable[int], *, force: bool = False) -> list[CheckResult]:
    """Inversion-sequence and component bijections against brute enumeration."""
    results = []
    for n in n_values:
        ensure_within_cap(max(factorial(n), n ** n), force)

        perms = [Permutation(w) for w in itertools.permutations(range(1, n + 1))]

        bad = []
        for pi in perms:
            if cyc.perm_from_inv_seq(cyc.inv_seq(pi)) != pi:
                bad.append(f"{pi.word}")
        for entries in itertools.product(*(range(i) for i in range(1, n + 1))):
            if cyc.inv_seq(cyc.perm_from_inv_seq(entries)).entries != entries:
                bad.append(f"{entries}")
        results.append(
            CheckResult(
                f"inversion-sequence-bijection n={n}",
                not bad,
                bad[0] if bad else f"{len(perms)} permutations both ways",
            )
        )

        bad = []
        for pi in perms:
            greedy = [(c.start, c.end) for c in cyc.components(pi)]
            if greedy != _brute_minimal_blocks(pi.word):
                bad.append(f"{pi.word}")
        results.append(
            CheckResult(
                f"component-decomposition n={n}",
                not bad,
                bad[0] if bad else f"greedy cuts match minimal blocks on {len(perms)} permutations",
            )
        )

        cyclic_pfs = list(cyc.enumerate_cyclic_pf(n, force=True))
        comp_total = sum(len(cyc.components(pi)) for pi in perms)
        formula = cyc.cyclic_total_count(n)
        results.append(
            CheckResult(
                f"cyclic-count n={n}",
                len(cyclic_pfs) == formula == comp_total,
                f"brute {len(cyclic_pfs)}, formula {formula}, components {comp_total}",
            )
        )

        per_start: dict[int, int] = {}
        bad = []
        images = []
        by_displacement: dict[tuple[int, ...], int] = {}
        for p in cyclic_pfs:
            res = classical_park(p)
            start = res.outcome.word[0]
            per_start[start] = per_start.get(start, 0) + 1
            by_displacement[res.displacement] = by_displacement.get(res.displacement, 0) + 1
            c = cyc.psi(p)
            images.append(c)
            if cyc.psi_inverse(c) != p:
                bad.append(f"round trip at {p.entries}")
            if min(c.word) != start:
                bad.append(f"component minimum at {p.entries}")
            host = c.underlying
            if any(
                res.displacement[j - 1] != cyc.inversion_number(j, host)
                for j in range(1, n + 1)
            ):
                bad.append(f"displacement/inversion at {p.entries}")

        all_components = [c for pi in perms for c in cyc.components(pi)]
        if sorted(
            (c.underlying.word, c.start) for c in images
        ) != sorted((c.underlying.word, c.start) for c in all_components):
            bad.append("image is not all components exactly once")
        for c in all_components:
            if cyc.psi(cyc.psi_inverse(c)) != c:
                bad.append(f"reverse round trip at {c.underlying.word}[{c.start}..{c.end}]")
                break
        results.append(
            CheckResult(
                f"component-bijection-round-trip n={n}",
                not bad,
                bad[0] if bad else f"{len(cyclic_pfs)} preferences <-> {len(all_components)} components",
            )
        )

        bad = [
            f"start {start}"
            for start in range(1, n + 1)
            if per_start.get(start, 0) != cyc.cyclic_fibre_size(start, n)
        ]
        results.append(
            CheckResult(
                f"cyclic-fibre-sizes n={n}",
                not bad,
                bad[0] if bad else f"all {n} rotation fibres match the factorial product",
            )
        )

        bad = []
        for entries in itertools.product(*(range(i) for i in range(1, n + 1))):
            want = len(cyc.components(cyc.perm_from_inv_seq(entries)))
            got = by_displacement.get(entries, 0)
            if want != got:
                bad.append(f"displacement {entries}: {got} preferences vs {want} components")
        results.append(
            CheckResult(
                f"displacement-fibres n={n}",
                not bad,
                bad[0] if bad else f"{factorial(n)} displacement vectors",
            )
        )
    return results


def _brute_minimal_blocks(word: tuple[int, ...]) -> list[tuple[int, int]]:
    """Quadratic reference decomposition: repeatedly take the shortest prefix
    of the remainder that occupies its own position interval."""
    n = len(word)
    blocks = []
    start = 1
    while start <= n:
        end = start
        while sorted(word[start - 1 : end]) != list(range(start, end + 1)):
            end += 1
        blocks.append((start, end))
        start = end + 1
    return blocks


# The ten cyclic preferences of length 3 with their displacement vectors,
# host permutations and marked components (start position of the block).
N3_REFERENCE_TABLE = (
    ((1, 2, 3), (1, 1, 1), (0, 1, 2), (3, 2, 1), 1),
    ((1, 2, 3), (1, 1, 2), (0, 1, 1), (2, 3, 1), 1),
    ((1, 2, 3), (1, 1, 3), (0, 1, 0), (2, 1, 3), 1),
    ((1, 2, 3), (1, 2, 1), (0, 0, 2), (3, 1, 2), 1),
    ((1, 2, 3), (1, 2, 2), (0, 0, 1), (1, 3, 2), 1),
    ((1, 2, 3), (1, 2, 3), (0, 0, 0), (1, 2, 3), 1),
    ((2, 3, 1), (3, 1, 1), (0, 0, 1), (1, 3, 2), 2),
    ((2, 3, 1), (3, 1, 2), (0, 0, 0), (1, 2, 3), 2),
    ((3, 1, 2), (2, 2, 1), (0, 1, 0), (2, 1, 3), 3),
    ((3, 1, 2), (2, 3, 1), (0, 0, 0), (1, 2, 3), 3),
)


def n3_reference_rows() -> list[tuple]:
    """Regenerate the length-3 table: every cyclic preference with outcome,
    displacement, host permutation and marked component, grouped by rotation
    start and then lexicographic."""
    rows = []
    for start in range(1, 4):
        target = increasing_word(start, 3)
        for entries in itertools.product(range(1, 4), repeat=3):
            p = ParkingPreference(entries)
            res = classical_park(p)
            if not isinstance(res, Success) or res.outcome.word != target:
                continue
            c = cyc.psi(p)
            rows.append((target, entries, res.displacement, c.underlying.word, c.start))
    return rows


def table1_suite() -> list[CheckResult]:
    rows = n3_reference_rows()
    ok = tuple(rows) == N3_REFERENCE_TABLE
    detail = f"{len(rows)} rows regenerated"
    if not ok:
        for got, want in zip(rows, N3_REFERENCE_TABLE):
            if got != want:
                detail = f"first mismatch: {got} != {want}"
                break
        else:
            detail = f"row count {len(rows)} != {len(N3_REFERENCE_TABLE)}"
    return [CheckResult("three-car-reference-table", ok, detail)]


def run_suite(
    suite: str, n_values: Sequence[int] | None = None, *, force: bool = False
) -> list[CheckResult]:
    """Run one named suite (or all of them) and collect check results."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITE_NAMES}")

    def values(kind: str) -> Sequence[int]:
        if n_values is not None:
            return n_values
        return DEFAULT_RANGES[kind]

    results: list[CheckResult] = []
    if suite in ("table1", "all"):
        results.extend(table1_suite())
    if suite in ("props", "all"):
        results.extend(props_suite(values("props"), force=force))
    if suite in ("cycle", "all"):
        results.extend(cycle_suite([n for n in values("cycle") if n >= 3], force=force))
    if suite in ("bijection", "all"):
        results.extend(bijection_suite(values("bijection"), force=force))
    return results
