"""Tests for the prime sum graph: adjacency, edge classes, export."""

import json

import numpy as np
import pytest

from primesum.graph import EdgeClass, PrimeSumGraph
from primesum.primes import build_prime_set


def brute_edges(n: int, is_prime) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if is_prime(u + v)
    ]


@pytest.fixture(scope="module")
def primes_1200():
    return build_prime_set(1200)


class TestAdjacency:
    def test_examples(self):
        g = PrimeSumGraph(10)
        assert g.adjacent(1, 2)  # 3 prime
        assert g.adjacent(3, 10)  # 13 prime
        assert not g.adjacent(2, 4)  # 6 composite
        assert not g.adjacent(3, 3)  # no self-loops even though 6... 3+3=6 anyway
        assert not g.adjacent(1, 1)  # self-loop excluded despite 2 prime

    def test_out_of_range_vertex(self):
        g = PrimeSumGraph(5)
        with pytest.raises(ValueError):
            g.adjacent(0, 3)
        with pytest.raises(ValueError):
            g.adjacent(1, 6)
        with pytest.raises(ValueError):
            g.neighbors(6)
        with pytest.raises(ValueError):
            g.degree(0)

    def test_neighbors(self):
        g = PrimeSumGraph(6)
        assert g.neighbors(1) == [2, 4, 6]
        assert g.neighbors(6) == [1, 5]

    def test_degree_matches_neighbors(self, primes_1200):
        for n in (1, 2, 7, 40, 123):
            g = PrimeSumGraph(n, primes_1200)
            for v in range(1, n + 1):
                assert g.degree(v) == len(g.neighbors(v)), (n, v)

    def test_constructor_validation(self):
        with pytest.raises(ValueError):
            PrimeSumGraph(0)
        small = build_prime_set(10)
        with pytest.raises(ValueError):
            PrimeSumGraph(50, small)  # table must cover sums up to 2n-1


class TestSumAndEdgeClasses:
    def test_edge_class_examples(self):
        g = PrimeSumGraph(10)
        assert g.edge_class(5).edges == ((1, 4), (2, 3))
        assert g.edge_class(7).edges == ((1, 6), (2, 5), (3, 4))
        assert g.edge_class(13).edges == ((3, 10), (4, 9), (5, 8), (6, 7))
        assert g.edge_class(17).edges == ((7, 10), (8, 9))
        assert g.edge_class(8).edges == ()  # composite sum carries no edges
        assert g.edge_class(2).edges == ()  # would need u = v = 1

    def test_sum_class_counts_match_enumeration(self, primes_1200):
        for n in (1, 2, 3, 10, 47, 300):
            g = PrimeSumGraph(n, primes_1200)
            for m in range(0, 2 * n + 2):
                pairs = [
                    (u, m - u) for u in range(1, n + 1) if u < m - u <= n
                ]
                assert g.sum_class_size(m) == len(pairs), (n, m)
                assert g.sum_class_pairs(m) == tuple(pairs), (n, m)

    def test_class_sums_are_the_odd_primes_in_range(self):
        g = PrimeSumGraph(10)
        assert g.class_sums().tolist() == [3, 5, 7, 11, 13, 17, 19]

    def test_edge_class_type(self):
        g = PrimeSumGraph(4)
        ec = g.edge_class(7)
        assert isinstance(ec, EdgeClass)
        assert ec.m == 7
        assert ec.edges == ((3, 4),)


class TestEdges:
    def test_edge_count_examples(self):
        assert PrimeSumGraph(2).edge_count() == 1
        assert PrimeSumGraph(4).edge_count() == 4
        assert PrimeSumGraph(10).edge_count() == 18
        assert PrimeSumGraph(20).edge_count() == 56

    def test_edge_count_matches_brute_force(self, primes_1200):
        for n in range(1, 121):
            g = PrimeSumGraph(n, primes_1200)
            want = brute_edges(n, primes_1200.is_prime)
            assert g.edge_count() == len(want), n

    def test_iter_edges_lexicographic_and_complete(self, primes_1200):
        for n in (1, 2, 5, 31, 120):
            g = PrimeSumGraph(n, primes_1200)
            got = list(g.iter_edges())
            assert got == sorted(got)
            assert got == brute_edges(n, primes_1200.is_prime)

    def test_edges_join_opposite_parities_for_sums_above_two(self):
        # u+v prime and > 2 forces u+v odd, so one endpoint is even.
        g = PrimeSumGraph(120)
        for u, v in g.iter_edges():
            assert (u + v) % 2 == 1, (u, v)


class TestExport:
    def test_json_example(self):
        got = PrimeSumGraph(4).export("json")
        assert got == '{"n":4,"edges":[[1,2],[1,4],[2,3],[3,4]]}'

    def test_dot_example(self):
        got = PrimeSumGraph(2).export("dot")
        assert got == "graph G {\n  1 -- 2;\n}\n"

    def test_json_round_trip(self):
        g = PrimeSumGraph(30)
        data = json.loads(g.export("json"))
        assert data["n"] == 30
        assert [tuple(e) for e in data["edges"]] == list(g.iter_edges())

    def test_unsupported_format(self):
        with pytest.raises(ValueError):
            PrimeSumGraph(4).export("graphml")
