"""Tests for the prime sieve, Miller-Rabin check, and segmented iteration."""

import numpy as np
import pytest

from primesum.primes import (
    CapacityError,
    SegmentSpec,
    build_prime_set,
    is_prime_u64,
    next_prime_in,
    primes_in_range,
    shared_prime_set,
)


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


TRIAL_LIMIT = 100_000
TRIAL_FLAGS = np.array(
    [trial_division_is_prime(i) for i in range(TRIAL_LIMIT + 1)], dtype=bool
)


class TestPrimeSet:
    def test_agrees_with_trial_division(self):
        ps = build_prime_set(TRIAL_LIMIT)
        got = ps.is_prime_vec(np.arange(TRIAL_LIMIT + 1, dtype=np.int64))
        assert np.array_equal(got, TRIAL_FLAGS)

    def test_small_values(self):
        ps = build_prime_set(100)
        assert not ps.is_prime(0)
        assert not ps.is_prime(1)
        assert ps.is_prime(2)
        assert ps.is_prime(3)
        assert not ps.is_prime(4)
        assert ps.is_prime(97)
        assert not ps.is_prime(100)

    def test_count_upto_pi_of_one_million(self):
        ps = build_prime_set(1_000_000)
        assert ps.count_upto(1_000_000) == 78_498

    def test_count_upto_small(self):
        ps = build_prime_set(100)
        assert ps.count_upto(2) == 1
        assert ps.count_upto(10) == 4
        assert ps.count_upto(100) == 25
        assert ps.count_upto(1) == 0
        assert ps.count_upto(0) == 0
        assert ps.count_upto() == 25

    def test_primes_array_matches_flags(self):
        ps = build_prime_set(TRIAL_LIMIT)
        got = ps.primes_array()
        want = np.flatnonzero(TRIAL_FLAGS)
        assert np.array_equal(got, want)

    def test_primes_array_subranges(self):
        ps = build_prime_set(1000)
        assert ps.primes_array(2, 30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert ps.primes_array(10, 30).tolist() == [11, 13, 17, 19, 23, 29]
        assert ps.primes_array(24, 28).tolist() == []
        assert ps.primes_array(11, 13).tolist() == [11, 13]

    def test_odd_prime_mask(self):
        ps = build_prime_set(1000)
        values = np.arange(1, 1000, 2, dtype=np.int64)
        mask = ps.odd_prime_mask(values)
        want = TRIAL_FLAGS[values]
        assert np.array_equal(mask, want)

    def test_is_prime_vec_handles_even_and_small(self):
        ps = build_prime_set(100)
        v = np.array([0, 1, 2, 3, 4, 9, 97, 98], dtype=np.int64)
        want = [False, False, True, True, False, False, True, False]
        assert ps.is_prime_vec(v).tolist() == want

    def test_is_prime_vec_range_check(self):
        ps = build_prime_set(100)
        with pytest.raises(ValueError):
            ps.is_prime_vec(np.array([101], dtype=np.int64))
        with pytest.raises(ValueError):
            ps.is_prime_vec(np.array([-1], dtype=np.int64))

    def test_is_prime_scalar_beyond_limit_falls_back(self):
        ps = build_prime_set(100)
        # Above the table limit the scalar path answers via Miller-Rabin.
        assert ps.is_prime(101)
        assert not ps.is_prime(1001)

    def test_capacity_error(self):
        with pytest.raises(CapacityError):
            build_prime_set(10**12)

    def test_limit_too_small(self):
        with pytest.raises(ValueError):
            build_prime_set(1)


class TestSharedPrimeSet:
    def test_cached_instance_reused(self):
        a = shared_prime_set(1000)
        b = shared_prime_set(900)
        assert a is b  # both round up to the same table size

    def test_limit_covers_request(self):
        for request in (10, 1000, 70_000, 1_000_001):
            ps = shared_prime_set(request)
            assert ps.limit >= request


class TestIsPrimeU64:
    def test_small_values_agree_with_trial_division(self):
        for n in range(0, 2000):
            assert is_prime_u64(n) == trial_division_is_prime(n), n

    def test_random_values_agree_with_trial_division(self):
        rng = np.random.default_rng(7)
        for n in rng.integers(2, TRIAL_LIMIT, size=500):
            n = int(n)
            assert is_prime_u64(n) == bool(TRIAL_FLAGS[n]), n

    def test_large_known_primes(self):
        assert is_prime_u64(2**61 - 1)  # Mersenne prime
        assert is_prime_u64(2**64 - 59)  # largest prime below 2**64
        assert is_prime_u64(1_000_000_007)

    def test_large_known_composites(self):
        assert not is_prime_u64(2**64 - 1)
        assert not is_prime_u64(3215031751)  # strong pseudoprime to bases 2,3,5,7
        assert not is_prime_u64(341)  # Fermat pseudoprime base 2
        assert not is_prime_u64(561)  # Carmichael number


class TestNextPrimeIn:
    def test_examples(self):
        ps = build_prime_set(100)
        assert next_prime_in(2, 4, ps) == 3
        assert next_prime_in(8, 16, ps) == 11
        assert next_prime_in(24, 28, ps) is None

    def test_bounds_are_exclusive(self):
        ps = build_prime_set(100)
        # 7 itself is excluded on both sides.
        assert next_prime_in(7, 11, ps) is None
        assert next_prime_in(6, 11, ps) == 7
        assert next_prime_in(7, 12, ps) == 11

    def test_two_is_reachable(self):
        assert next_prime_in(0, 3) == 2
        assert next_prime_in(1, 3) == 2
        assert next_prime_in(2, 3) is None

    def test_empty_interval(self):
        assert next_prime_in(10, 10) is None
        with pytest.raises(ValueError):
            next_prime_in(10, 9)

    def test_no_table_falls_back_to_direct_test(self):
        assert next_prime_in(2**32, 2**32 + 20) == 4294967311

    def test_prime_in_doubling_interval(self):
        # A prime strictly between m and 2m exists for every m >= 2
        # (Bertrand's postulate); the matching construction relies on this.
        ps = build_prime_set(400_000)
        for m in range(2, 100_000):
            assert next_prime_in(m, 2 * m, ps) is not None, m


class TestPrimesInRange:
    def test_matches_flat_sieve_small(self):
        ps = build_prime_set(TRIAL_LIMIT)
        want = ps.primes_array()
        got = primes_in_range(0, TRIAL_LIMIT, segment_size=1500)
        assert np.array_equal(got, want)

    def test_segment_size_invariance(self):
        want = primes_in_range(1000, 20_000)
        for size in (200, 777, 5000):
            assert np.array_equal(primes_in_range(1000, 20_000, size), want)

    def test_subrange(self):
        got = primes_in_range(100, 200)
        want = [
            101, 103, 107, 109, 113, 127, 131, 137, 139,
            149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
        ]
        assert got.tolist() == want

    def test_ten_million_count(self):
        assert len(primes_in_range(0, 10_000_000)) == 664_579  # pi(10**7)

    def test_segment_spec_validation(self):
        with pytest.raises(ValueError):
            SegmentSpec(0, 10, 0)
        with pytest.raises(ValueError):
            SegmentSpec(5, 3, 100)
        with pytest.raises(ValueError):
            # segment_size must cover sqrt(hi)
            primes_in_range(0, 1_000_000, segment_size=100)

    def test_empty_and_boundary_ranges(self):
        assert primes_in_range(24, 28).size == 0
        assert primes_in_range(11, 13).tolist() == [11, 13]
        assert primes_in_range(0, 1).size == 0
        assert primes_in_range(2, 2).tolist() == [2]
