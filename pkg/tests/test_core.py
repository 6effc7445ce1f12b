import pytest
from hypothesis import given
from hypothesis import strategies as st

from parkfun import (
    FriendshipGraph,
    Permutation,
    all_labelled_graphs,
    graph_generator,
    identity_permutation,
    inverse_position,
    make_graph,
    make_preference,
    parse_graph_text,
)


class TestMakePreference:
    def test_worked_example(self):
        p = make_preference((3, 1, 1, 2))
        assert p.entries == (3, 1, 1, 2)
        assert p.n == 4

    def test_smallest(self):
        assert make_preference((1,)).n == 1

    def test_entry_exceeds_n(self):
        with pytest.raises(ValueError):
            make_preference((5, 1))

    def test_zero_entry(self):
        with pytest.raises(ValueError):
            make_preference((0, 1))

    def test_empty(self):
        with pytest.raises(ValueError):
            make_preference(())


class TestPermutation:
    def test_rejects_repeats(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 3))

    def test_rejects_wrong_values(self):
        with pytest.raises(ValueError):
            Permutation((2, 3, 4))

    def test_inverse_position_worked_example(self):
        assert inverse_position(Permutation((2, 3, 1, 4)), 1) == 3

    def test_inverse_position_identity(self):
        ident = identity_permutation(6)
        for k in range(1, 7):
            assert inverse_position(ident, k) == k

    def test_inverse_position_direct_scan(self):
        assert inverse_position(Permutation((4, 1, 5, 3, 2)), 5) == 3

    def test_inverse_position_out_of_range(self):
        with pytest.raises(ValueError):
            inverse_position(Permutation((2, 1)), 3)

    @given(st.permutations(list(range(1, 8))))
    def test_inverse_position_round_trip(self, word):
        perm = Permutation(tuple(word))
        for value in range(1, 8):
            assert perm.word[inverse_position(perm, value) - 1] == value


class TestGraphGenerator:
    def test_cycle_4(self):
        g = graph_generator("cycle", 4)
        assert g.edges == frozenset({(1, 2), (2, 3), (3, 4), (1, 4)})

    def test_complete_2(self):
        assert graph_generator("complete", 2).edges == frozenset({(1, 2)})

    def test_cycle_too_small(self):
        with pytest.raises(ValueError):
            graph_generator("cycle", 2)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            graph_generator("wheel", 5)

    def test_path(self):
        g = graph_generator("path", 3)
        assert g.edges == frozenset({(1, 2), (2, 3)})

    @pytest.mark.parametrize("n", [3, 4, 5, 8])
    def test_cycle_is_two_regular(self, n):
        g = graph_generator("cycle", n)
        assert len(g.edges) == n
        for v in range(1, n + 1):
            assert len(g.neighbors(v)) == 2


class TestFriendshipGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            make_graph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            make_graph(3, [(1, 4)])

    def test_duplicate_edges_collapse(self):
        g = make_graph(3, [(1, 2), (2, 1)])
        assert g.edges == frozenset({(1, 2)})

    @given(
        st.integers(min_value=1, max_value=6).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.sets(
                    st.tuples(
                        st.integers(1, n), st.integers(1, n)
                    ).filter(lambda e: e[0] != e[1])
                ),
            )
        )
    )
    def test_adjacency_symmetric(self, payload):
        n, edges = payload
        g = make_graph(n, edges)
        for u in range(1, n + 1):
            for v in range(1, n + 1):
                assert g.adjacent(u, v) == g.adjacent(v, u)

    def test_all_labelled_graphs_count(self):
        assert sum(1 for _ in all_labelled_graphs(4)) == 64
        assert sum(1 for _ in all_labelled_graphs(3)) == 8


GRAPH_FILE = """\
# a 4-cycle
n 4
1 2
2 3

3 4
4 1
"""


class TestGraphFile:
    def test_parse(self):
        g = parse_graph_text(GRAPH_FILE)
        assert g == graph_generator("cycle", 4)

    def test_missing_header(self):
        with pytest.raises(ValueError):
            parse_graph_text("1 2\n")

    def test_bad_edge_line(self):
        with pytest.raises(ValueError):
            parse_graph_text("n 3\n1 2 3\n")

    def test_non_integer(self):
        with pytest.raises(ValueError):
            parse_graph_text("n 3\na b\n")
