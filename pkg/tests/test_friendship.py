import itertools
import random

import pytest

from parkfun import (
    Failure,
    LotState,
    Success,
    SearchCapExceeded,
    all_labelled_graphs,
    classical_park,
    enumerate_fpf,
    count_fpf_brute,
    friendship_park,
    graph_generator,
    is_available,
    is_friendship_pf,
    is_hamiltonian_path,
    is_parking_function,
    make_graph,
    make_preference,
)

STAR = make_graph(4, [(1, 2), (1, 3), (1, 4)])


class TestLotState:
    def test_with_cars(self):
        state = LotState.with_cars(4, {2: 1, 1: 2})
        assert state.car_at(2) == 1
        assert state.car_at(1) == 2
        assert state.car_at(3) is None

    def test_rejects_duplicate_car(self):
        with pytest.raises(ValueError):
            LotState((1, 1, None))

    def test_place_is_functional(self):
        empty = LotState.empty(3)
        placed = empty.place(2, 1)
        assert empty.car_at(2) is None
        assert placed.car_at(2) == 1
        with pytest.raises(ValueError):
            placed.place(2, 2)


class TestIsAvailable:
    def test_blocked_by_stranger(self, c4):
        state = LotState.with_cars(4, {2: 1, 1: 2})
        assert not is_available(state, c4, car=3, spot=3)

    def test_empty_lot_everything_available(self, c4):
        state = LotState.empty(4)
        for car in range(1, 5):
            for spot in range(1, 5):
                assert is_available(state, c4, car, spot)

    def test_friends_on_both_sides(self, c4):
        state = LotState.with_cars(4, {2: 1, 1: 2, 4: 3})
        assert is_available(state, c4, car=4, spot=3)

    def test_occupied_spot_never_available(self, c4):
        state = LotState.with_cars(4, {2: 1})
        assert not is_available(state, c4, car=2, spot=2)

    def test_spot_out_of_range(self, c4):
        with pytest.raises(ValueError):
            is_available(LotState.empty(4), c4, car=1, spot=5)


class TestFriendshipPark:
    def test_worked_example(self, c4):
        res = friendship_park(make_preference((2, 1, 2, 2)), c4)
        assert isinstance(res, Success)
        assert res.outcome.word == (2, 1, 4, 3)

    def test_failing_example(self, c4):
        assert friendship_park(make_preference((4, 2, 2, 1)), c4) == Failure(car=3)

    def test_car_one_parks_at_preference(self, c4):
        for entries in itertools.product(range(1, 5), repeat=4):
            res = friendship_park(make_preference(entries), c4)
            if isinstance(res, Success):
                assert res.outcome.word[entries[0] - 1] == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_complete_graph_equals_classical(self, n):
        kn = graph_generator("complete", n)
        for entries in itertools.product(range(1, n + 1), repeat=n):
            p = make_preference(entries)
            assert friendship_park(p, kn) == classical_park(p)

    def test_dimension_mismatch(self, c4):
        with pytest.raises(ValueError):
            friendship_park(make_preference((1, 2, 3)), c4)

    def test_outcome_is_hamiltonian_path(self, c4):
        for entries in itertools.product(range(1, 5), repeat=4):
            res = friendship_park(make_preference(entries), c4)
            if isinstance(res, Success):
                assert is_hamiltonian_path(res.outcome, c4)


class TestIsFriendshipPf:
    def test_examples(self, c4):
        assert is_friendship_pf(make_preference((2, 1, 2, 2)), c4)
        assert not is_friendship_pf(make_preference((4, 2, 2, 1)), c4)

    def test_increasing_cycle_witness(self, c4):
        p = make_preference((2, 3, 1, 1))
        res = friendship_park(p, c4)
        assert isinstance(res, Success)
        assert res.outcome.word == (4, 1, 2, 3)


class TestEnumerateFpf:
    def test_c4_contents(self, c4):
        stream = [p.entries for p in enumerate_fpf(c4)]
        assert (2, 1, 2, 2) in stream
        assert (4, 2, 2, 1) not in stream
        assert stream == sorted(stream)
        assert len(stream) == 65

    def test_no_hamiltonian_path_empty(self):
        assert list(enumerate_fpf(STAR)) == []

    def test_c3_total(self):
        assert len(list(enumerate_fpf(graph_generator("cycle", 3)))) == 16

    def test_cap_refusal(self, monkeypatch):
        monkeypatch.setenv("PARKFUN_BRUTE_CAP", "100")
        with pytest.raises(SearchCapExceeded):
            list(enumerate_fpf(graph_generator("cycle", 4)))
        # force overrides the cap
        assert len(list(enumerate_fpf(graph_generator("cycle", 4), force=True))) == 65

    def test_workers_agree(self, c4):
        single = [p.entries for p in enumerate_fpf(c4, workers=1)]
        sharded = [p.entries for p in enumerate_fpf(c4, workers=2)]
        assert single == sharded
        assert count_fpf_brute(c4, workers=2) == len(single)


class TestContainment:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_friendship_subset_of_classical_all_graphs(self, n):
        for graph in all_labelled_graphs(n):
            for entries in itertools.product(range(1, n + 1), repeat=n):
                p = make_preference(entries)
                if is_friendship_pf(p, graph):
                    assert is_parking_function(p)

    def test_friendship_subset_random_graphs_n5(self):
        rng = random.Random(11)
        pairs = list(itertools.combinations(range(1, 6), 2))
        for _ in range(6):
            graph = make_graph(5, [e for e in pairs if rng.random() < 0.5])
            for entries in itertools.product(range(1, 6), repeat=5):
                p = make_preference(entries)
                if is_friendship_pf(p, graph):
                    assert is_parking_function(p)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_classical_outcome_transfer(self, n):
        for graph in all_labelled_graphs(n):
            for entries in itertools.product(range(1, n + 1), repeat=n):
                p = make_preference(entries)
                res = classical_park(p)
                if isinstance(res, Success) and is_hamiltonian_path(res.outcome, graph):
                    fres = friendship_park(p, graph)
                    assert fres == res

    @pytest.mark.parametrize("n", [4, 5])
    def test_witness_beyond_hamiltonian_outcomes(self, n):
        """Some friendship parking functions have non-Hamiltonian classical outcomes."""
        cn = graph_generator("cycle", n)
        witnesses = []
        for entries in itertools.product(range(1, n + 1), repeat=n):
            p = make_preference(entries)
            if not is_friendship_pf(p, cn):
                continue
            res = classical_park(p)
            if not is_hamiltonian_path(res.outcome, cn):
                witnesses.append(entries)
        assert witnesses
        if n == 4:
            assert (2, 1, 2, 2) in witnesses
