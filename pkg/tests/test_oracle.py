"""Tests for the exhaustive brute-force oracles."""

import numpy as np
import pytest

from primesum.hamilton import cycle_from_witness, find_witness, validate_cycle
from primesum.matching import greenfield_matching, validate_matching
from primesum.oracle import (
    BRUTE_HAMILTON_MAX,
    BRUTE_MATCHING_MAX,
    brute_hamilton,
    brute_matching_exists,
)


class TestBruteHamilton:
    def test_smallest_cases(self):
        assert brute_hamilton(2) is None  # a 2-cycle is degenerate
        c4 = brute_hamilton(4)
        assert c4 is not None and validate_cycle(c4)
        c6 = brute_hamilton(6)
        assert c6.order.tolist() == [1, 4, 3, 2, 5, 6]

    def test_first_in_search_order(self):
        # DFS prefers the smallest unvisited neighbor, and the fixed
        # orientation demands second < last; spot-check on 2n=4.
        c = brute_hamilton(4)
        assert c.order.tolist() == [1, 2, 3, 4]

    def test_cycles_exist_and_validate_up_to_bound(self):
        for two_n in range(4, BRUTE_HAMILTON_MAX + 1, 2):
            c = brute_hamilton(two_n)
            assert c is not None, two_n
            assert validate_cycle(c), two_n
            assert c.witness is None

    def test_agrees_with_witness_construction(self):
        # Both methods must agree a cycle exists; the cycles themselves may
        # differ (the oracle knows nothing about difference sets).
        for two_n in range(4, BRUTE_HAMILTON_MAX + 1, 2):
            w = find_witness(two_n // 2)
            assert w is not None, two_n
            assert validate_cycle(cycle_from_witness(w)), two_n
            assert brute_hamilton(two_n) is not None, two_n

    def test_deterministic(self):
        a = brute_hamilton(20)
        b = brute_hamilton(20)
        assert np.array_equal(a.order, b.order)

    def test_bounds(self):
        with pytest.raises(ValueError):
            brute_hamilton(3)
        with pytest.raises(ValueError):
            brute_hamilton(0)
        with pytest.raises(ValueError):
            brute_hamilton(BRUTE_HAMILTON_MAX + 2)


class TestBruteMatching:
    def test_exists_for_all_small_even_sizes(self):
        for two_n in range(2, BRUTE_MATCHING_MAX + 1, 2):
            assert brute_matching_exists(two_n), two_n

    def test_agrees_with_construction(self):
        for two_n in range(2, BRUTE_MATCHING_MAX + 1, 2):
            m = greenfield_matching(two_n // 2)
            assert validate_matching(m), two_n

    def test_bounds(self):
        with pytest.raises(ValueError):
            brute_matching_exists(5)
        with pytest.raises(ValueError):
            brute_matching_exists(BRUTE_MATCHING_MAX + 2)
