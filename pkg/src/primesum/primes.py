"""Primality infrastructure.

Three layers, matched to how the rest of the package consumes primality:

* ``PrimeSet`` -- a bit-packed, odds-only sieve table answering ``is_prime``
  for every value up to a fixed limit, cheap enough to hold for limits in
  the 10^8 range (one bit per odd number).
* segmented sieving (``primes_in_range``) -- enumerate primes in a window
  without building a table to the window's upper end.
* ``is_prime_u64`` -- deterministic Miller-Rabin, exact for the full 64-bit
  range, used for values beyond any table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Packed table budget: 512 MiB of bits covers limits up to ~8.6 * 10^9.
DEFAULT_TABLE_BUDGET = 512 * 1024 * 1024

# Witness basis making Miller-Rabin deterministic for all k < 3.3 * 10^24,
# comfortably past 2^64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_ODDS_PER_BLOCK = 1 << 22  # sieve working set per pass: 4 MiB of bool flags

_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint16)


class CapacityError(Exception):
    """The requested sieve table would exceed the memory budget."""


def is_prime_u64(k: int) -> bool:
    """Exact primality for 0 <= k < 2**64 (no table required)."""
    if k < 2:
        return False
    for p in _MR_BASES:
        if k % p == 0:
            return k == p
    d = k - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, k)
        if x == 1 or x == k - 1:
            continue
        for _ in range(s - 1):
            x = x * x % k
            if x == k - 1:
                break
        else:
            return False
    return True


def _odd_base_primes(limit: int) -> list[int]:
    """Odd primes <= limit by a plain sieve (used as base primes)."""
    if limit < 3:
        return []
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return [int(p) for p in np.flatnonzero(flags) if p % 2 == 1]


def _odd_flag_block(lo_idx: int, hi_idx: int, base: list[int]) -> np.ndarray:
    """Primality flags for the odd values 2*i+1, i in [lo_idx, hi_idx)."""
    block = np.ones(hi_idx - lo_idx, dtype=bool)
    if lo_idx == 0:
        block[0] = False  # 1 is not prime
    lo_val = 2 * lo_idx + 1
    hi_val = 2 * hi_idx - 1
    for p in base:
        if p * p > hi_val:
            break
        start = p * p
        if start < lo_val:
            start = ((lo_val + p - 1) // p) * p
            if start % 2 == 0:
                start += p
        block[(start >> 1) - lo_idx :: p] = False
    return block


class PrimeSet:
    """Bit-packed primality flags for the odd numbers 1..limit.

    Immutable after construction and safe for concurrent reads. Queries
    above ``limit`` fall back to the deterministic 64-bit test, never to
    the table.
    """

    __slots__ = ("limit", "_packed", "_n_odds")

    def __init__(self, limit: int, packed: np.ndarray):
        self.limit = limit
        self._packed = packed
        self._n_odds = (limit + 1) // 2

    def is_prime(self, k: int) -> bool:
        if k > self.limit:
            return is_prime_u64(k)
        if k < 3 or k % 2 == 0:
            return k == 2
        i = k >> 1
        return bool((self._packed[i >> 3] >> (i & 7)) & 1)

    def odd_prime_mask(self, values: np.ndarray) -> np.ndarray:
        """Vectorized table lookup; every value must be odd and <= limit."""
        i = values >> 1
        return ((self._packed[i >> 3] >> (i & 7).astype(np.uint8)) & 1).astype(bool)

    def is_prime_vec(self, values) -> np.ndarray:
        """Vectorized primality for arbitrary values <= limit."""
        v = np.asarray(values, dtype=np.int64)
        if v.size and (int(v.max()) > self.limit or int(v.min()) < 0):
            raise ValueError("value outside table range")
        out = np.zeros(v.shape, dtype=bool)
        odd = (v & 1) == 1
        odd &= v >= 3
        if odd.any():
            out[odd] = self.odd_prime_mask(v[odd])
        out |= v == 2
        return out

    def count_upto(self, x: int | None = None) -> int:
        """Number of primes <= x (default: <= limit)."""
        if x is None or x > self.limit:
            x = self.limit
        if x < 2:
            return 0
        n_odds = min((x + 1) // 2, self._n_odds)  # flags for odds 1..x
        full, rem = divmod(n_odds, 8)
        total = int(_POPCOUNT[self._packed[:full]].sum())
        if rem:
            tail = int(self._packed[full]) & ((1 << rem) - 1)
            total += bin(tail).count("1")
        return total + 1  # the prime 2

    def primes_array(self, lo: int = 2, hi: int | None = None) -> np.ndarray:
        """All primes p with lo <= p <= hi, from the table."""
        hi = self.limit if hi is None else min(hi, self.limit)
        if hi < lo or hi < 2:
            return np.empty(0, dtype=np.int64)
        i_lo = max(lo, 3) >> 1
        i_hi = hi >> 1 if hi % 2 else (hi - 1) >> 1
        odds = np.empty(0, dtype=np.int64)
        if i_hi >= i_lo:
            b_lo, b_hi = i_lo >> 3, (i_hi >> 3) + 1
            bits = np.unpackbits(self._packed[b_lo:b_hi], bitorder="little")
            idx = np.flatnonzero(bits) + 8 * b_lo
            idx = idx[(idx >= i_lo) & (idx <= i_hi)]
            odds = 2 * idx.astype(np.int64) + 1
        if lo <= 2 <= hi:
            return np.concatenate([np.array([2], dtype=np.int64), odds])
        return odds


def build_prime_set(limit: int, table_budget: int = DEFAULT_TABLE_BUDGET) -> PrimeSet:
    """Sieve the odds up to ``limit`` into a PrimeSet.

    Raises CapacityError when the packed table would exceed ``table_budget``
    bytes.
    """
    if limit < 2:
        raise ValueError("limit must be >= 2")
    n_odds = (limit + 1) // 2
    packed_bytes = (n_odds + 7) // 8
    if packed_bytes > table_budget:
        raise CapacityError(
            f"table for limit {limit} needs {packed_bytes} bytes "
            f"(budget {table_budget})"
        )
    packed = np.zeros(packed_bytes, dtype=np.uint8)
    base = _odd_base_primes(math.isqrt(limit))
    for lo_idx in range(0, n_odds, _ODDS_PER_BLOCK):
        hi_idx = min(lo_idx + _ODDS_PER_BLOCK, n_odds)
        block = _odd_flag_block(lo_idx, hi_idx, base)
        packed[lo_idx >> 3 : (hi_idx + 7) >> 3] = np.packbits(
            block, bitorder="little"
        )
    return PrimeSet(limit, packed)


@lru_cache(maxsize=6)
def _shared_rounded(limit: int) -> PrimeSet:
    return build_prime_set(limit)


def shared_prime_set(limit: int) -> PrimeSet:
    """A cached PrimeSet covering at least ``limit``.

    Limits are rounded up to powers of two so repeated nearby requests hit
    the cache. The returned set is shared: treat it as read-only.
    """
    limit = max(limit, 1 << 16)
    return _shared_rounded(1 << (limit - 1).bit_length())


@dataclass(frozen=True)
class SegmentSpec:
    """A sieving window [lo, hi] processed in segments.

    ``segment_size`` is the working set per segment in bytes (one byte per
    odd candidate); it must be at least ceil(sqrt(hi)) so one pass over the
    base primes covers a whole segment.
    """

    lo: int
    hi: int
    segment_size: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("lo must be <= hi")
        if self.segment_size < 1:
            raise ValueError("segment_size must be positive")
        if self.segment_size < math.isqrt(max(self.hi, 0)) + 1:
            raise ValueError("segment_size must be >= ceil(sqrt(hi))")


def primes_in_range(
    lo: int, hi: int, segment_size: int | None = None
) -> np.ndarray:
    """All primes p with lo <= p <= hi, by segmented sieving.

    Memory stays proportional to ``segment_size`` regardless of hi.
    """
    if segment_size is None:
        segment_size = max(_ODDS_PER_BLOCK, math.isqrt(max(hi, 0)) + 1)
    spec = SegmentSpec(lo, hi, segment_size)
    lo, hi = max(spec.lo, 2), spec.hi
    if hi < 2 or hi < lo:
        return np.empty(0, dtype=np.int64)
    base = _odd_base_primes(math.isqrt(hi))
    i_lo = max(lo, 3) >> 1
    i_hi = hi >> 1 if hi % 2 else (hi - 1) >> 1
    parts = []
    if lo <= 2 <= hi:
        parts.append(np.array([2], dtype=np.int64))
    start = i_lo
    while start <= i_hi:
        stop = min(start + spec.segment_size, i_hi + 1)
        block = _odd_flag_block(start, stop, base)
        parts.append(2 * (np.flatnonzero(block).astype(np.int64) + start) + 1)
        start = stop
    return np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)


def next_prime_in(lo: int, hi: int, primes: PrimeSet | None = None) -> int | None:
    """Smallest prime p with lo < p < hi (both bounds strict), or None."""
    if lo > hi:
        raise ValueError("lo must be <= hi")
    test = primes.is_prime if primes is not None else is_prime_u64
    k = lo + 1
    if k <= 2:
        if 2 < hi:
            return 2
        k = 3
    if k % 2 == 0:
        k += 1
    while k < hi:
        if test(k):
            return k
        k += 2
    return None
