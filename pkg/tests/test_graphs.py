from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indlab.graphs import (
    Graph,
    are_isomorphic,
    blow_up,
    complement,
    find_isomorphism,
    induced_subgraph,
    iterated_blow_up,
    make_chain,
    make_circulant,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_dlg,
    make_paley,
    make_path,
    random_graph,
)


def graphs_of_order(n, seed_codes):
    return [Graph.from_code(n, c) for c in seed_codes]


def triangles(g):
    return sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if g.adjacent(a, b) and g.adjacent(a, c) and g.adjacent(b, c)
    )


class TestGraphBasics:
    def test_symmetry_enforced(self):
        with pytest.raises(ValueError):
            Graph(2, [0b10, 0b00])

    def test_irreflexive_enforced(self):
        with pytest.raises(ValueError):
            Graph(1, [0b1])

    def test_row_range_enforced(self):
        with pytest.raises(ValueError):
            Graph(2, [0b100, 0])

    def test_code_roundtrip(self):
        g = make_dlg(7)
        assert Graph.from_code(7, g.code()) == g

    def test_degree_and_edges(self):
        g = make_cycle(5)
        assert g.degree_sequence() == (2, 2, 2, 2, 2)
        assert g.edge_count == 5
        assert sorted(g.edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


class TestCirculant:
    def test_octahedron(self):
        g = make_circulant(6, {1, 2})
        assert g.n == 6
        assert g.degree_sequence() == (4,) * 6
        assert g.edge_count == 12

    def test_k5(self):
        assert make_circulant(5, {1, 2}) == make_complete(5)

    def test_one_jump_is_cycle(self):
        for n in range(3, 13):
            assert are_isomorphic(make_circulant(n, {1}), make_cycle(n))

    def test_half_jump_single_chord(self):
        g = make_circulant(4, {2})
        assert g.edge_count == 2
        assert g.degree_sequence() == (1, 1, 1, 1)

    @pytest.mark.parametrize("n,jumps", [(2, {1}), (6, {0}), (6, {4}), (6, set())])
    def test_rejects(self, n, jumps):
        with pytest.raises(ValueError):
            make_circulant(n, jumps)


class TestDlg:
    def test_order5_is_complete(self):
        assert make_dlg(5) == make_complete(5)

    def test_order6_complement_is_matching(self):
        c = complement(make_dlg(6))
        assert c.edge_count == 3
        assert c.degree_sequence() == (1,) * 6

    def test_order7_complement_is_cycle(self):
        assert are_isomorphic(complement(make_dlg(7)), make_cycle(7))

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            make_dlg(4)


class TestChain:
    def test_base_is_triangle(self):
        assert make_chain(0) == make_complete(3)

    def test_one_step_is_k4_minus_edge(self):
        g = make_chain(1)
        assert (g.n, g.edge_count) == (4, 5)

    def test_seven_vertices(self):
        g = make_chain(4)
        assert (g.n, g.edge_count) == (7, 11)

    @pytest.mark.parametrize("t", range(7))
    def test_edge_and_triangle_counts(self, t):
        g = make_chain(t)
        assert g.edge_count == 2 * t + 3
        assert triangles(g) == t + 1

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            make_chain(-1)


class TestFamilies:
    def test_multipartite_222_is_dlg6(self):
        assert are_isomorphic(make_complete_multipartite([2, 2, 2]), make_dlg(6))

    def test_k33(self):
        g = make_complete_multipartite([3, 3])
        assert g.edge_count == 9

    def test_multipartite_rejects_empty(self):
        with pytest.raises(ValueError):
            make_complete_multipartite([])

    def test_paley5_is_c5(self):
        assert make_paley(5) == make_cycle(5)

    def test_paley13(self):
        g = make_paley(13)
        assert g.degree_sequence() == (6,) * 13
        assert g.edge_count == 39

    @pytest.mark.parametrize("q", [7, 9, 15, 21])
    def test_paley_rejects(self, q):
        with pytest.raises(ValueError):
            make_paley(q)

    def test_path(self):
        assert make_path(4).edge_count == 3


class TestComplement:
    def test_involution(self):
        for g in (make_dlg(7), make_chain(3), make_paley(13)):
            assert complement(complement(g)) == g

    def test_degree_sum(self):
        g = make_chain(4)
        c = complement(g)
        assert all(g.degree(v) + c.degree(v) == g.n - 1 for v in range(g.n))

    def test_complete_to_empty(self):
        assert complement(make_complete(4)).edge_count == 0


class TestBlowUp:
    def test_triangle_to_octahedron(self):
        assert are_isomorphic(blow_up(make_complete(3), [2, 2, 2]), make_dlg(6))

    def test_edge_to_k33(self):
        assert are_isomorphic(
            blow_up(make_complete(2), [3, 3]), make_complete_multipartite([3, 3])
        )

    def test_c5_doubled(self):
        g = blow_up(make_cycle(5), [2] * 5)
        assert (g.n, g.edge_count) == (10, 20)

    def test_unit_sizes_identity(self):
        g = make_chain(2)
        assert are_isomorphic(blow_up(g, [1] * g.n), g)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            blow_up(make_cycle(5), [2, 2])

    def test_iterated_base(self):
        assert iterated_blow_up(make_cycle(5), 1) == make_cycle(5)

    def test_iterated_order_growth(self):
        assert iterated_blow_up(make_cycle(5), 2).n == 25
        assert iterated_blow_up(make_cycle(5), 3).n == 125

    def test_iterated_rejects(self):
        with pytest.raises(ValueError):
            iterated_blow_up(make_cycle(5), 0)


class TestInducedSubgraph:
    def test_triangle_of_octahedron(self):
        assert induced_subgraph(make_dlg(6), {0, 1, 2}) == make_complete(3)

    def test_full_set_identity(self):
        g = make_chain(3)
        assert induced_subgraph(g, range(g.n)) == g

    def test_one_side_of_k33(self):
        g = make_complete_multipartite([3, 3])
        assert induced_subgraph(g, {0, 1, 2}).edge_count == 0

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(make_cycle(4), {0, 9})


class TestIsomorphism:
    def test_detects_octahedron(self):
        assert are_isomorphic(make_dlg(6), make_complete_multipartite([2, 2, 2]))

    def test_rejects_different_edge_counts(self):
        assert not are_isomorphic(make_complete(4), make_cycle(4))

    def test_same_degrees_different_graphs(self):
        two_triangles = Graph.from_edges(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        )
        assert not are_isomorphic(make_cycle(6), two_triangles)

    def test_mapping_is_valid(self):
        g = make_chain(4)
        perm = [3, 5, 0, 6, 1, 4, 2]
        h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        iso = find_isomorphism(g, h)
        assert iso is not None
        assert all(
            g.adjacent(u, v) == h.adjacent(iso[u], iso[v])
            for u in range(g.n)
            for v in range(u + 1, g.n)
        )


class TestRandomGraph:
    def test_extremes(self):
        assert random_graph(10, 0, 1).edge_count == 0
        assert random_graph(10, 1, 1) == make_complete(10)

    def test_deterministic(self):
        assert random_graph(12, "1/2", 42) == random_graph(12, "1/2", 42)

    def test_seed_sensitivity(self):
        assert random_graph(12, "1/2", 0) != random_graph(12, "1/2", 1)

    def test_edge_count_window(self):
        # 66 pairs at p = 1/2: five sigma around the mean of 33
        g = random_graph(12, "1/2", 42)
        assert 20 <= g.edge_count <= 46

    def test_rejects_bad_probability(self):
        with pytest.raises(ValueError):
            random_graph(5, "3/2", 0)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(0, 8), data=st.data())
def test_complement_involution_random(n, data):
    code = data.draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    g = Graph.from_code(n, code)
    assert complement(complement(g)) == g


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 7), data=st.data())
def test_relabeling_is_isomorphic(n, data):
    code = data.draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    perm = data.draw(st.permutations(range(n)))
    g = Graph.from_code(n, code)
    h = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in g.edges()])
    assert are_isomorphic(g, h)
