import pytest

from splitcw.catalog import catalog
from splitcw.cliquewidth import (
    Create,
    ExpressionParseError,
    Join,
    MalformedExpressionError,
    Rename,
    UnionOp,
    build_rp1_expression,
    clique_width,
    cw_at_most,
    evaluate,
    expression_vertex_order,
    parse_expression,
    serialize_expression,
    width,
)
from splitcw.graphs import (
    Graph,
    are_isomorphic,
    independence_number,
    induced_subgraph,
    permute,
)
from splitcw.harness import enumerate_graphs, enumerate_split_graphs
from splitcw.split import SplitPartition, split_partitions

from .oracle_cw import oracle_clique_width, reachable_unlabelled, _canon_unlabelled


class TestEvaluate:
    def test_create(self):
        lg = evaluate(Create(1))
        assert lg.graph == Graph(1) and lg.labels == (1,)

    def test_join_makes_edge(self):
        lg = evaluate(Join(1, 2, UnionOp(Create(1), Create(2))))
        assert lg.graph == catalog("K2")

    def test_join_same_label_rejected(self):
        with pytest.raises(MalformedExpressionError):
            evaluate(Join(1, 1, Create(1)))

    def test_label_zero_rejected(self):
        with pytest.raises(MalformedExpressionError):
            evaluate(Create(0))

    def test_rename_merges(self):
        expr = Rename(2, 1, Join(1, 2, UnionOp(Create(1), Create(2))))
        lg = evaluate(expr)
        assert lg.labels == (1, 1)

    def test_width(self):
        assert width(Create(1)) == 1
        assert width(Join(1, 2, UnionOp(Create(1), Create(2)))) == 2
        assert width(Rename(3, 1, Create(1))) == 2


class TestTextFormat:
    def test_serializer_no_whitespace(self):
        expr = Rename(3, 4, Join(1, 2, UnionOp(Create(1), Create(2))))
        text = serialize_expression(expr)
        assert text == "r(3>4,j(1,2,u(v(1),v(2))))"
        assert " " not in text

    def test_parse_round_trip(self):
        text = "r(3>4,j(1,2,u(v(1),v(2))))"
        assert serialize_expression(parse_expression(text)) == text

    def test_whitespace_insensitive(self):
        a = parse_expression("j(1,2,u(v(1),v(2)))")
        b = parse_expression("  j ( 1 , 2 , u ( v(1) , v(2) ) )  ")
        assert a == b

    @pytest.mark.parametrize(
        "bad",
        ["", "v()", "v(0)", "j(1,1,v(1))", "x(1)", "v(1))", "u(v(1)", "r(1,2,v(1))"],
    )
    def test_malformed_rejected(self, bad):
        with pytest.raises(ExpressionParseError):
            parse_expression(bad)


class TestExactValues:
    def test_conventions(self):
        assert clique_width(Graph(0)) == 0
        assert clique_width(Graph(1)) == 1
        assert clique_width(Graph(6)) == 1

    def test_p4(self):
        assert cw_at_most(catalog("P4"), 2) is None
        assert cw_at_most(catalog("P4"), 3) is not None
        assert clique_width(catalog("P4")) == 3

    def test_c5(self):
        assert clique_width(catalog("C5")) == 3

    def test_complete_graphs(self):
        for n in range(2, 7):
            assert clique_width(catalog(f"K{n}")) == 2

    def test_star_forests(self):
        for name in ("K1,3", "K1,3+K1,2", "K1,5+K1,1+P1", "K1,2+2P1"):
            assert clique_width(catalog(name)) == 2

    def test_solver_expression_sound(self):
        for n in range(1, 6):
            for g in enumerate_graphs(n):
                k = clique_width(g)
                if k == 0:
                    continue
                expr = cw_at_most(g, k)
                assert expr is not None
                assert width(expr) <= k
                assert are_isomorphic(evaluate(expr).graph, g)

    def test_monotone_under_induced_subgraphs(self):
        for n in range(2, 6):
            for g in enumerate_graphs(n):
                w = clique_width(g)
                for v in range(g.n):
                    sub = induced_subgraph(g, [u for u in range(g.n) if u != v])
                    assert clique_width(sub) <= w


class TestOracleCalibration:
    def test_reachable_counts_small(self):
        # with one label only edgeless graphs appear
        assert len(reachable_unlabelled(4, 1)) == 4
        # two labels miss exactly one of the 18 classes up to n=4 (the path P4)
        r2 = reachable_unlabelled(4, 2)
        assert len(r2) == 17
        assert _canon_unlabelled(catalog("P4")) not in r2
        assert len(reachable_unlabelled(4, 3)) == 18

    def test_agreement_all_n5(self):
        for n in range(1, 6):
            for g in enumerate_graphs(n):
                assert oracle_clique_width(g) == clique_width(g), g.edges

    def test_oracle_spot_values(self):
        assert oracle_clique_width(catalog("P4")) == 3
        assert oracle_clique_width(catalog("C5")) == 3
        for n in range(2, 7):
            assert oracle_clique_width(catalog(f"K{n}")) == 2
        # a star forest with edges needs both labels but no more
        assert oracle_clique_width(catalog("K1,3+K1,1")) == 2
        assert oracle_clique_width(catalog("K1,2+K1,1")) == 2


class TestBuilder:
    def test_k3(self):
        e = build_rp1_expression(catalog("K3"), SplitPartition.of([0, 1, 2], []), 2)
        assert width(e) <= 3
        assert are_isomorphic(evaluate(e).graph, catalog("K3"))

    def test_p4(self):
        e = build_rp1_expression(catalog("P4"), SplitPartition.of([1, 2], [0, 3]), 3)
        assert width(e) <= 4
        assert are_isomorphic(evaluate(e).graph, catalog("P4"))

    def test_claw(self):
        e = build_rp1_expression(
            catalog("K1,3"), SplitPartition.of([0], [1, 2, 3]), 4
        )
        assert width(e) <= 5
        assert are_isomorphic(evaluate(e).graph, catalog("K1,3"))

    def test_exact_vertex_correspondence(self):
        g = catalog("F5")
        p = split_partitions(g)[0]
        r = independence_number(g) + 1
        e = build_rp1_expression(g, p, r)
        order = expression_vertex_order(g, p)
        built = evaluate(e).graph
        perm = [0] * g.n
        for leaf_pos, original in enumerate(order):
            perm[leaf_pos] = original
        assert permute(built, perm) == g

    def test_precondition_violations(self):
        with pytest.raises(ValueError):
            build_rp1_expression(catalog("P4"), SplitPartition.of([1, 2], [0, 3]), 2)
        with pytest.raises(ValueError):
            build_rp1_expression(
                catalog("K1,3"), SplitPartition.of([0], [1, 2, 3]), 3
            )

    def test_bound_over_split_graphs_n6(self):
        for n in range(1, 7):
            for g in enumerate_split_graphs(n):
                alpha = independence_number(g)
                p = split_partitions(g)[0]
                for r in (alpha + 1, alpha + 2):
                    e = build_rp1_expression(g, p, r)
                    assert width(e) <= r + 1
                    assert are_isomorphic(evaluate(e).graph, g)
