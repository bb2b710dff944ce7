import pytest

from splitcw.catalog import catalog
from splitcw.graph6 import (
    Graph6Error,
    decode,
    encode,
    from_edge_list_text,
    to_edge_list_text,
)
from splitcw.graphs import Graph
from splitcw.harness import enumerate_graphs


class TestEncode:
    def test_known_strings(self):
        assert encode(catalog("K2")) == "A_"
        assert encode(Graph(2)) == "A?"
        assert encode(catalog("K3")) == "Bw"

    def test_header_accepted(self):
        assert decode(">>graph6<<A_") == catalog("K2")

    def test_round_trip_all_n7(self):
        for n in range(8):
            for g in enumerate_graphs(n):
                text = encode(g)
                assert decode(text) == g
                assert encode(decode(text)) == text

    def test_large_n_prefix(self):
        g = Graph(70, [(0, 69)])
        assert decode(encode(g)) == g


class TestMalformed:
    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "A",        # missing payload
            "A_?",      # payload too long
            "\x1b_",    # character below range
            ">>graphX<<A_",  # bad header
            "~",        # truncated extended count
        ],
    )
    def test_rejected(self, bad):
        with pytest.raises(Graph6Error):
            decode(bad)

    def test_nonzero_padding_rejected(self):
        # n=2 with the single edge bit zero but a padding bit set
        with pytest.raises(Graph6Error):
            decode("A" + chr(63 + 1))


class TestEdgeListText:
    def test_round_trip(self):
        g = catalog("bull")
        assert from_edge_list_text(to_edge_list_text(g)) == g

    def test_first_line_is_count(self):
        g = from_edge_list_text("3\n0 1\n")
        assert g == Graph(3, [(0, 1)])

    def test_bad_input(self):
        with pytest.raises(ValueError):
            from_edge_list_text("x\n")
        with pytest.raises(ValueError):
            from_edge_list_text("3\n0 1 2\n")
