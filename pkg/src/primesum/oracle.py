"""Independent brute-force ground truth on small G_2n.

Exhaustive backtracking searches, deliberately sharing no logic with the
constructive modules they certify: adjacency lists are materialized and
walked directly, no difference sets, no closed forms.
"""

from __future__ import annotations

import numpy as np

from .hamilton import HamiltonCycle
from .primes import PrimeSet, shared_prime_set

BRUTE_HAMILTON_MAX = 32
BRUTE_MATCHING_MAX = 24


def _adjacency(two_n: int, primes: PrimeSet) -> list[list[int]]:
    """Sorted adjacency lists for G_two_n, index 0 unused."""
    adj: list[list[int]] = [[] for _ in range(two_n + 1)]
    for u in range(1, two_n + 1):
        for v in range(u + 1, two_n + 1):
            if primes.is_prime(u + v):
                adj[u].append(v)
                adj[v].append(u)
    return adj


def brute_hamilton(two_n: int, primes: PrimeSet | None = None) -> HamiltonCycle | None:
    """Exhaustive Hamilton-cycle search on G_two_n, or None if none exists.

    Depth-first from vertex 1, extending by smallest unvisited neighbor
    first; orientation is fixed (second vertex smaller than last) to halve
    the search. A 2-cycle is degenerate, so two_n=2 returns None.
    """
    if two_n < 2 or two_n % 2:
        raise ValueError("two_n must be even and >= 2")
    if two_n > BRUTE_HAMILTON_MAX:
        raise ValueError(f"two_n > {BRUTE_HAMILTON_MAX}: backtracking bound exceeded")
    if two_n == 2:
        return None
    if primes is None:
        primes = shared_prime_set(4 * (two_n // 2))
    adj = _adjacency(two_n, primes)
    path = [1]
    used = [False] * (two_n + 1)
    used[1] = True

    def extend() -> bool:
        if len(path) == two_n:
            return path[1] < path[-1] and path[-1] in adj[1]
        for v in adj[path[-1]]:
            if not used[v]:
                used[v] = True
                path.append(v)
                if extend():
                    return True
                path.pop()
                used[v] = False
        return False

    if extend():
        return HamiltonCycle(two_n, np.array(path, dtype=np.int64), witness=None)
    return None


def brute_matching_exists(two_n: int, primes: PrimeSet | None = None) -> bool:
    """Exhaustive check that {1..two_n} splits into prime-sum pairs.

    Backtracking on the smallest unmatched vertex; its partner choices are
    tried in ascending order.
    """
    if two_n < 2 or two_n % 2:
        raise ValueError("two_n must be even and >= 2")
    if two_n > BRUTE_MATCHING_MAX:
        raise ValueError(f"two_n > {BRUTE_MATCHING_MAX}: backtracking bound exceeded")
    if primes is None:
        primes = shared_prime_set(4 * (two_n // 2))
    adj = _adjacency(two_n, primes)
    unmatched = [True] * (two_n + 1)

    def pair_up(remaining: int) -> bool:
        if remaining == 0:
            return True
        u = next(v for v in range(1, two_n + 1) if unmatched[v])
        unmatched[u] = False
        for v in adj[u]:
            if unmatched[v]:
                unmatched[v] = False
                if pair_up(remaining - 2):
                    return True
                unmatched[v] = True
        unmatched[u] = True
        return False

    return pair_up(two_n)
