import itertools
from math import factorial, prod

import pytest

from parkfun import (
    NotHamiltonianPath,
    Permutation,
    Success,
    blocking_sequence,
    enumerate_fibre,
    fibre_characterisation,
    fibre_size,
    fig4_graph,
    friendship_park,
    graph_generator,
    hamiltonian_paths,
    has_hamiltonian_path,
    identity_permutation,
    inverse_position,
    is_blocker,
    make_graph,
    make_preference,
    total_fpf_count,
)
from tests.conftest import brute_fibres_by_outcome

FIG4 = fig4_graph()
PI_FIG4 = Permutation((8, 7, 1, 5, 2, 4, 6, 3))
STAR = make_graph(4, [(1, 2), (1, 3), (1, 4)])


def test_fig4_edge_list():
    spanning = {(8, 7), (7, 1), (1, 5), (5, 2), (2, 4), (4, 6), (6, 3)}
    chords = {(8, 4), (4, 3), (3, 2), (2, 8)}
    assert FIG4 == make_graph(8, spanning | chords)


class TestHamiltonianPaths:
    def test_c4_paths(self, c4):
        words = [p.word for p in hamiltonian_paths(c4)]
        # brute force over all 24 permutations of [4]
        expected = [
            w
            for w in itertools.permutations(range(1, 5))
            if all(c4.adjacent(w[k], w[k + 1]) for k in range(3))
        ]
        assert words == sorted(expected)
        assert len(words) == 8

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_complete_graph_all_permutations(self, n):
        kn = graph_generator("complete", n)
        words = [p.word for p in hamiltonian_paths(kn)]
        assert words == sorted(itertools.permutations(range(1, n + 1)))
        assert len(words) == factorial(n)

    def test_fig4_contains_worked_path(self):
        assert PI_FIG4 in list(hamiltonian_paths(FIG4))

    def test_lexicographic_order(self):
        words = [p.word for p in hamiltonian_paths(FIG4)]
        assert words == sorted(words)

    def test_has_hamiltonian_path(self):
        assert has_hamiltonian_path(graph_generator("cycle", 5))
        assert not has_hamiltonian_path(STAR)
        assert has_hamiltonian_path(make_graph(1, []))

    @pytest.mark.parametrize("n", [5, 6])
    def test_nonempty_iff_hamiltonian_random_graphs(self, n):
        import random

        rng = random.Random(n * 17)
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for _ in range(4):
            graph = make_graph(n, [e for e in pairs if rng.random() < 0.4])
            brute_nonempty = any(
                isinstance(friendship_park(make_preference(entries), graph), Success)
                for entries in itertools.product(range(1, n + 1), repeat=n)
            )
            assert brute_nonempty == has_hamiltonian_path(graph)
            assert brute_nonempty == (total_fpf_count(graph) > 0)


class TestIsBlocker:
    def test_larger_values_next_to_hostile_small_one(self):
        assert is_blocker(7, 4, PI_FIG4, FIG4)
        assert is_blocker(5, 4, PI_FIG4, FIG4)

    def test_non_blockers(self):
        assert not is_blocker(8, 4, PI_FIG4, FIG4)
        assert not is_blocker(6, 4, PI_FIG4, FIG4)

    def test_value_blocks_itself(self):
        for i in range(1, 9):
            assert is_blocker(i, i, PI_FIG4, FIG4)

    def test_smaller_values_always_block(self):
        assert is_blocker(2, 4, PI_FIG4, FIG4)
        assert is_blocker(1, 8, PI_FIG4, FIG4)


class TestBlockingSequence:
    def test_worked_example(self):
        run = blocking_sequence(4, PI_FIG4, FIG4)
        assert run.elements == (7, 1, 5, 2, 4)
        assert run.length == 5

    def test_value_one_blocks_only_itself(self, c4, c5):
        for graph in (c4, c5, FIG4):
            for pi in hamiltonian_paths(graph):
                assert blocking_sequence(1, pi, graph).elements == (1,)

    def test_second_worked_example(self):
        run = blocking_sequence(6, PI_FIG4, FIG4)
        assert run.elements == (7, 1, 5, 2, 4, 6)


class TestFibreCharacterisation:
    def test_worked_example_sets(self):
        chi = fibre_characterisation(PI_FIG4, FIG4)
        assert chi.spot_sets == (
            (3, 3),
            (2, 5),
            (8, 8),
            (2, 6),
            (3, 4),
            (2, 7),
            (2, 2),
            (1, 1),
        )

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_complete_graph_identity(self, n):
        kn = graph_generator("complete", n)
        chi = fibre_characterisation(identity_permutation(n), kn)
        assert chi.spot_sets == tuple((1, i) for i in range(1, n + 1))

    @pytest.mark.parametrize("n", [4, 5])
    def test_complete_graph_identity_matches_brute_force(self, n):
        kn = graph_generator("complete", n)
        fibres = brute_fibres_by_outcome(kn)
        box = {p.entries for p in enumerate_fibre(identity_permutation(n), kn)}
        assert box == fibres[tuple(range(1, n + 1))]

    def test_first_set_is_position_of_one(self, c4):
        for pi in hamiltonian_paths(c4):
            chi = fibre_characterisation(pi, c4)
            pos = inverse_position(pi, 1)
            assert chi.spot_sets[0] == (pos, pos)

    def test_contiguous_and_anchored(self, c5):
        for pi in hamiltonian_paths(c5):
            chi = fibre_characterisation(pi, c5)
            for i in range(1, 6):
                lo, hi = chi.spot_sets[i - 1]
                assert 1 <= lo <= hi == inverse_position(pi, i)

    def test_rejects_non_hamiltonian(self, c4):
        with pytest.raises(NotHamiltonianPath):
            fibre_characterisation(Permutation((1, 3, 2, 4)), c4)


class TestFibreSize:
    def test_worked_example(self):
        assert fibre_size(PI_FIG4, FIG4) == 240

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_complete_graph_identity(self, n):
        kn = graph_generator("complete", n)
        assert fibre_size(identity_permutation(n), kn) == factorial(n)

    def test_three_cycle_adjustment(self):
        c3 = graph_generator("cycle", 3)
        assert fibre_size(Permutation((1, 3, 2)), c3) == 2


class TestEnumerateFibre:
    def test_contains_increasing_cycle_preference(self, c4):
        box = [p.entries for p in enumerate_fibre(Permutation((4, 1, 2, 3)), c4)]
        assert (2, 3, 1, 1) in box

    def test_forced_when_all_runs_are_singletons(self, c4):
        pi = Permutation((4, 3, 2, 1))
        box = list(enumerate_fibre(pi, c4))
        assert len(box) == 1
        assert box[0].entries == tuple(inverse_position(pi, i) for i in range(1, 5))

    def test_matches_brute_force_exactly(self, c4):
        fibres = brute_fibres_by_outcome(c4)
        pi = Permutation((2, 1, 4, 3))
        box = {p.entries for p in enumerate_fibre(pi, c4)}
        assert box == fibres[pi.word]
        for entries in box:
            res = friendship_park(make_preference(entries), c4)
            assert isinstance(res, Success) and res.outcome == pi

    def test_size_matches_length(self, c5):
        for pi in hamiltonian_paths(c5):
            assert fibre_size(pi, c5) == sum(1 for _ in enumerate_fibre(pi, c5))

    def test_lexicographic(self, c4):
        box = [p.entries for p in enumerate_fibre(Permutation((2, 1, 4, 3)), c4)]
        assert box == sorted(box)


class TestTotalCount:
    def test_star_has_none(self):
        assert total_fpf_count(STAR) == 0

    def test_single_vertex(self):
        assert total_fpf_count(make_graph(1, [])) == 1

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_matches_enumeration(self, n, cycle_brute):
        counts, _ = cycle_brute(n)
        assert total_fpf_count(graph_generator("cycle", n)) == sum(counts.values())

    def test_fibres_partition_total(self, c4):
        fibres = brute_fibres_by_outcome(c4)
        per_outcome = {
            pi.word: prod(hi - lo + 1 for lo, hi in fibre_characterisation(pi, c4).spot_sets)
            for pi in hamiltonian_paths(c4)
        }
        assert per_outcome == {w: len(s) for w, s in fibres.items()}
