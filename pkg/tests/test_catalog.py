import pytest

from splitcw.catalog import (
    CatalogError,
    bull,
    catalog,
    dart,
    f1,
    f2,
    f3,
    f4,
    f5,
    q,
    subdivided_claw,
)
from splitcw.graphs import (
    canonical_code,
    complement,
    are_isomorphic,
    induced_subgraph,
)
from splitcw.split import is_split
from splitcw.subgraph import contains_induced


def six_vertex_subgraph_codes(g):
    return {
        canonical_code(induced_subgraph(g, [u for u in range(g.n) if u != v]))
        for v in range(g.n)
    }


class TestFixedLayouts:
    def test_bull_edges(self):
        assert sorted(bull().edges) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4)]

    def test_dart_is_bull_plus_edge(self):
        assert sorted(dart().edges) == sorted(bull().edges + [(1, 3)])
        # both have five vertices, so the bull is a subgraph of the dart but
        # not an induced one
        assert contains_induced(dart(), bull()) is None

    def test_counts(self):
        for g, n, m in [
            (f1(), 6, 8), (f2(), 6, 9), (f3(), 6, 9),
            (q(), 6, 7), (f4(), 7, 7), (f5(), 7, 10),
        ]:
            assert (g.n, g.m) == (n, m)

    def test_subdivided_claw(self):
        s = subdivided_claw(1, 1, 2)
        assert s.n == 5 and s.degree(0) == 3
        assert catalog("S1,1,1") == catalog("K1,3")

    def test_all_f_graphs_split(self):
        for name in ("F1", "F2", "F3", "Q", "F4", "F5"):
            assert is_split(catalog(name)), name


class TestSixVertexSubgraphs:
    def test_f4_list(self):
        expected = {
            canonical_code(g)
            for g in (
                catalog("bull+P1"),
                complement(f1()),
                complement(f3()),
                catalog("K1,3+2P1"),
            )
        }
        assert six_vertex_subgraph_codes(f4()) == expected

    def test_f5_list(self):
        expected = {
            canonical_code(g)
            for g in (
                catalog("bull+P1"),
                f1(),
                f2(),
                complement(f2()),
                f3(),
                complement(f3()),
                q(),
            )
        }
        assert six_vertex_subgraph_codes(f5()) == expected


class TestNameGrammar:
    @pytest.mark.parametrize(
        "name,n,m",
        [
            ("P1", 1, 0),
            ("P4", 4, 3),
            ("C5", 5, 5),
            ("K4", 4, 6),
            ("K1,3", 4, 3),
            ("2K2", 4, 2),
            ("3P1", 3, 0),
            ("bull+P1", 6, 5),
            ("K1,3+2P1", 6, 3),
            ("S1,2,3", 7, 6),
        ],
    )
    def test_sizes(self, name, n, m):
        g = catalog(name)
        assert (g.n, g.m) == (n, m)

    def test_whitespace_tolerated(self):
        assert catalog(" K1,3 + 2P1 ") == catalog("K1,3+2P1")

    @pytest.mark.parametrize("bad", ["", "X9", "C2", "S2,1,1", "K0", "0P1", "P"])
    def test_rejected(self, bad):
        with pytest.raises(CatalogError):
            catalog(bad)
