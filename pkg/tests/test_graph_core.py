import itertools

import pytest
from hypothesis import given, settings, strategies as st

from splitcw.catalog import catalog
from splitcw.graphs import (
    Graph,
    are_isomorphic,
    bipartite_complementation,
    canonical_code,
    complement,
    connected_components,
    disjoint_union,
    independence_number,
    induced_subgraph,
    permute,
    subgraph_complementation,
)
from splitcw.harness import enumerate_graphs

from .conftest import all_labelled_graphs, graph_from_bits


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    npairs = n * (n - 1) // 2
    bits = draw(st.integers(min_value=0, max_value=(1 << npairs) - 1))
    return graph_from_bits(n, bits)


class TestBasics:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 2)])

    def test_empty_graph_allowed(self):
        g = Graph(0)
        assert g.n == 0 and g.m == 0

    def test_value_semantics(self):
        a = Graph(3, [(0, 1)])
        b = Graph(3, [(1, 0)])
        assert a == b and hash(a) == hash(b)


class TestComplement:
    def test_edgeless_to_complete(self):
        assert complement(Graph(3)) == catalog("K3")

    def test_c5_self_complementary(self):
        c5 = catalog("C5")
        assert are_isomorphic(complement(c5), c5)

    def test_2k2_to_c4(self):
        assert are_isomorphic(complement(catalog("2K2")), catalog("C4"))

    def test_involution_exhaustive_n7(self):
        for n in range(8):
            for g in enumerate_graphs(n):
                assert complement(complement(g)) == g


class TestDisjointUnion:
    def test_two_singletons(self):
        assert disjoint_union(Graph(1), Graph(1)) == Graph(2)

    def test_bull_plus_p1(self):
        got = disjoint_union(catalog("bull"), catalog("P1"))
        assert are_isomorphic(got, catalog("bull+P1"))

    def test_2k2(self):
        got = disjoint_union(catalog("K2"), catalog("K2"))
        assert are_isomorphic(got, catalog("2K2"))


class TestInducedSubgraph:
    def test_path_prefix(self):
        assert are_isomorphic(induced_subgraph(catalog("P4"), [0, 1, 2]), catalog("P3"))

    def test_f4_minus_hub(self):
        # dropping the degree-4 diamond centre leaves the claw plus two isolates
        got = induced_subgraph(catalog("F4"), [1, 2, 3, 4, 5, 6])
        assert are_isomorphic(got, catalog("K1,3+2P1"))

    def test_q_clique_side(self):
        assert are_isomorphic(induced_subgraph(catalog("Q"), [0, 1, 2]), catalog("K3"))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(Graph(3), [0, 5])


class TestComplementations:
    def test_triangle_flip(self):
        assert subgraph_complementation(catalog("K3"), [0, 1, 2]) == Graph(3)

    def test_p4_middle_edge(self):
        got = subgraph_complementation(catalog("P4"), [1, 2])
        assert are_isomorphic(got, catalog("2K2"))

    def test_empty_set_identity(self):
        g = catalog("P4")
        assert subgraph_complementation(g, []) == g

    def test_bipartite_single_pair(self):
        assert bipartite_complementation(Graph(2), [0], [1]) == Graph(2, [(0, 1)])

    def test_bipartite_on_triangle(self):
        got = bipartite_complementation(catalog("K3"), [0], [1, 2])
        assert are_isomorphic(got, Graph(3, [(1, 2)]))

    def test_bipartite_empty_identity(self):
        g = catalog("P4")
        assert bipartite_complementation(g, [0, 1], []) == g

    def test_bipartite_rejects_overlap(self):
        with pytest.raises(ValueError):
            bipartite_complementation(Graph(3), [0, 1], [1, 2])

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=6), st.integers(min_value=0, max_value=63))
    def test_subgraph_complementation_involution(self, g, smask):
        s = [v for v in range(g.n) if smask >> v & 1]
        assert subgraph_complementation(subgraph_complementation(g, s), s) == g

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=6), st.integers(0, 63), st.integers(0, 63))
    def test_bipartite_complementation_involution(self, g, am, bm):
        s = [v for v in range(g.n) if am >> v & 1]
        t = [v for v in range(g.n) if bm >> v & 1 and not am >> v & 1]
        once = bipartite_complementation(g, s, t)
        assert bipartite_complementation(once, s, t) == g


class TestIsomorphism:
    def test_c5_complement(self):
        assert are_isomorphic(catalog("C5"), complement(catalog("C5")))

    def test_p4_vs_claw(self):
        assert not are_isomorphic(catalog("P4"), catalog("K1,3"))

    def test_code_stable_under_relabelling(self):
        p3 = catalog("P3")
        assert canonical_code(p3) == canonical_code(permute(p3, [2, 0, 1]))

    def test_codes_distinguish(self):
        assert canonical_code(catalog("K3")) != canonical_code(catalog("P3"))

    def test_eleven_codes_on_four_vertices(self):
        codes = {canonical_code(g) for g in all_labelled_graphs(4)}
        assert len(codes) == 11

    def test_iso_agrees_with_codes_n6(self):
        for n in range(7):
            classes = list(enumerate_graphs(n))
            codes = [canonical_code(g) for g in classes]
            assert len(set(codes)) == len(classes)
            for (g, cg), (h, ch) in itertools.combinations(zip(classes, codes), 2):
                assert not are_isomorphic(g, h)
                assert cg != ch

    def test_colored_codes(self):
        p3 = catalog("P3")
        a = canonical_code(p3, colors=(0, 1, 0))
        b = canonical_code(permute(p3, [2, 1, 0]), colors=(0, 1, 0))
        assert a == b
        assert a != canonical_code(p3, colors=(1, 0, 0))


class TestHelpers:
    def test_independence_number(self):
        assert independence_number(catalog("C5")) == 2
        assert independence_number(catalog("K1,3")) == 3
        assert independence_number(Graph(4)) == 4
        assert independence_number(catalog("K5")) == 1

    def test_components(self):
        comps = connected_components(catalog("2K2"))
        assert sorted(c.bit_count() for c in comps) == [2, 2]
