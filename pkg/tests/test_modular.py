import itertools

from splitcw.catalog import catalog
from splitcw.graphs import Graph, are_isomorphic
from splitcw.harness import enumerate_graphs
from splitcw.modular import (
    find_nontrivial_module,
    is_module,
    is_prime,
    prime_induced_subgraphs,
)


class TestIsModule:
    def test_p3_endpoints(self):
        assert is_module(catalog("P3"), [0, 2])

    def test_p4_middle_pair_is_not(self):
        assert not is_module(catalog("P4"), [1, 2])

    def test_trivial_sets(self):
        g = catalog("bull")
        assert is_module(g, [])
        assert is_module(g, [3])
        assert is_module(g, range(5))


class TestFindModule:
    def test_p4_prime(self):
        assert find_nontrivial_module(catalog("P4")) is None

    def test_p3_endpoints_found(self):
        assert find_nontrivial_module(catalog("P3")) == frozenset({0, 2})

    def test_bull_prime(self):
        assert find_nontrivial_module(catalog("bull")) is None

    def test_union_of_overlapping_modules(self):
        # classical sanity property, checked on all graphs with n <= 5
        for g in enumerate_graphs(5):
            modules = [
                frozenset(c)
                for size in range(2, g.n)
                for c in itertools.combinations(range(g.n), size)
                if is_module(g, c)
            ]
            for m1, m2 in itertools.combinations(modules, 2):
                if m1 & m2:
                    assert is_module(g, m1 | m2)


class TestIsPrime:
    def test_examples(self):
        assert is_prime(catalog("P4"))
        assert not is_prime(catalog("K3"))
        assert is_prime(catalog("K2"))
        assert is_prime(Graph(2))
        assert is_prime(Graph(1))


class TestPrimeInducedSubgraphs:
    def test_p4_plus_p4(self):
        primes = prime_induced_subgraphs(catalog("P4+P4"))
        assert any(are_isomorphic(g, catalog("P4")) for g in primes)
        assert max(g.n for g in primes) == 4

    def test_k5(self):
        primes = prime_induced_subgraphs(catalog("K5"))
        assert sorted((g.n, g.m) for g in primes) == [(1, 0), (2, 1)]

    def test_3p1(self):
        primes = prime_induced_subgraphs(Graph(3))
        assert sorted((g.n, g.m) for g in primes) == [(1, 0), (2, 0)]

    def test_deterministic_order(self):
        a = prime_induced_subgraphs(catalog("bull"))
        b = prime_induced_subgraphs(catalog("bull"))
        assert a == b
        assert [g.n for g in a] == sorted(g.n for g in a)
