"""Prime-pair perfect matchings of {1..2n}.

The construction: Bertrand's postulate gives a prime p = 2n + k in
(2n, 4n) with k odd. Pair the top block inward -- {k, 2n}, {k+1, 2n-1},
..., {n + floor(k/2), n + ceil(k/2)} -- every pair summing to p, then
repeat on the remaining prefix {1 .. k-1}. The suffix shrinks strictly,
so the recursion terminates; we always take the smallest prime in range,
which makes the output deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .primes import PrimeSet, next_prime_in, shared_prime_set


@dataclass(frozen=True, eq=False)
class PairMatching:
    """n pairs partitioning {1..2n}, each pair summing to a prime.

    ``pairs`` keeps the order the recursion generated (descending blocks);
    serialization canonicalizes.
    """

    n: int
    pairs: np.ndarray  # shape (n, 2)

    def sums(self) -> np.ndarray:
        return self.pairs.sum(axis=1)

    def canonical_pairs(self) -> np.ndarray:
        """Each pair sorted, pairs sorted by smaller element."""
        p = np.sort(self.pairs, axis=1)
        return p[np.argsort(p[:, 0], kind="stable")]

    def to_json(self) -> str:
        p = self.canonical_pairs()
        return json.dumps(
            {
                "n": self.n,
                "pairs": p.tolist(),
                "sums": p.sum(axis=1).tolist(),
            },
            separators=(",", ":"),
        )


def greenfield_matching(n: int, primes: PrimeSet | None = None) -> PairMatching:
    """Partition {1..2n} into n pairs with prime sums by the descending-block
    recursion (smallest prime in (2n, 4n) at every step)."""
    if n < 1:
        raise ValueError("n must be positive")
    if primes is None:
        primes = shared_prime_set(4 * n)
    blocks = []
    two_m = 2 * n
    while two_m > 0:
        p = next_prime_in(two_m, 2 * two_m, primes)
        if p is None:  # impossible: Bertrand guarantees a prime in (2m, 4m)
            raise AssertionError(f"no prime in ({two_m}, {2 * two_m})")
        k = p - two_m  # odd, 1 <= k < 2m
        count = (two_m - k + 1) // 2
        block = np.empty((count, 2), dtype=np.int64)
        block[:, 0] = np.arange(k, k + count)
        block[:, 1] = np.arange(two_m, two_m - count, -1)
        blocks.append(block)
        two_m = k - 1
    return PairMatching(n, np.concatenate(blocks))


def validate_matching(m: PairMatching, primes: PrimeSet | None = None) -> bool:
    """True iff the pairs partition {1..2n} exactly and every sum is prime."""
    pairs = np.asarray(m.pairs)
    if pairs.ndim != 2 or pairs.shape != (m.n, 2):
        return False
    flat = np.sort(pairs.reshape(-1))
    if not np.array_equal(flat, np.arange(1, 2 * m.n + 1)):
        return False
    sums = pairs.sum(axis=1)
    if primes is None or primes.limit < 4 * m.n - 1:
        primes = shared_prime_set(4 * m.n)
    return bool(primes.is_prime_vec(sums).all())
