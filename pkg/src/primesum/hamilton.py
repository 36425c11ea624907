"""Hamilton cycles of G_2n from difference sets on a bipartite labeling.

Label {1..2n} as X = (x_1..x_n), x_j = 2j-1 (odds ascending) and
Y = (y_1..y_n), y_k = 2n-2(k-1) (evens descending). The difference set
D_i = {x_j y_k : j-k = i (mod n)} is a perfect matching between X and Y,
and x_j + y_k is p when j-k = (p-1)/2 - n, and 2n+p when j-k = (p-1)/2.
So D_(p-1)/2 collects exactly the edges with sum p or 2n+p.

A witness (p1, p2) -- p1 = 1 or an odd prime, p2 an odd prime,
p1 < p2 <= 2n-1, with 2n+p1 and 2n+p2 prime and gcd((p2-p1)/2, n) = 1 --
makes D_s (s = (p1-1)/2) and D_t (t = (p2-1)/2) real edge sets of G_2n
whose union is a single Hamilton cycle: the union of two matchings is
2-regular, and it closes into one cycle exactly when gcd(t-s, n) = 1.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .primes import PrimeSet, shared_prime_set


def labeling(n: int) -> tuple[np.ndarray, np.ndarray]:
    """The X (odds ascending) and Y (evens descending) vertex labelings."""
    if n < 1:
        raise ValueError("n must be positive")
    x = np.arange(1, 2 * n, 2, dtype=np.int64)
    y = np.arange(2 * n, 0, -2, dtype=np.int64)
    return x, y


@dataclass(frozen=True)
class DifferenceSet:
    """The perfect matching {(x_j, y_k) : j-k = i (mod n)} on the labeling."""

    n: int
    i: int
    edges: tuple[tuple[int, int], ...]


def difference_set(n: int, i: int) -> DifferenceSet:
    """The n edges (x_j, y_k) with j-k = i (mod n), ordered by j."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 0 <= i <= n - 1:
        raise ValueError("residue out of range")
    j = np.arange(n, dtype=np.int64)  # 0-based side indices
    k = (j - i) % n
    xs = 2 * j + 1
    ys = 2 * n - 2 * k
    return DifferenceSet(n, i, tuple(zip(xs.tolist(), ys.tolist())))


def union_cycle_structure(n: int, s: int, t: int) -> list[list[int]]:
    """Decompose D_s union D_t into cycles by alternating walks.

    Returns gcd(t-s, n) cycles of length 2n/gcd each, as vertex sequences
    alternating X and Y values. Each cycle starts at its smallest X vertex
    and follows that vertex's D_s edge first.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    for r in (s, t):
        if not 0 <= r <= n - 1:
            raise ValueError("residue out of range")
    if s == t:
        raise ValueError("s == t: union of equal matchings is not 2-regular")
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = []
        a = start  # 0-based x index
        while not seen[a]:
            seen[a] = True
            b = (a - s) % n  # D_s edge x_a -> y_b
            cycle.append(2 * a + 1)
            cycle.append(2 * n - 2 * b)
            a = (b + t) % n  # D_t edge y_b -> x_a'
        cycles.append(cycle)
    return cycles


@dataclass(frozen=True)
class Witness:
    """A prime pair certifying Hamiltonicity of G_2n."""

    n: int
    p1: int
    p2: int


def _witness_violation(w: Witness, primes: PrimeSet) -> str | None:
    """The first violated Witness invariant, or None if all hold."""
    if w.n < 2:
        return "n must be >= 2"
    if w.p1 % 2 == 0 or w.p2 % 2 == 0:
        return "witness values must be odd"
    if not (1 <= w.p1 < w.p2 <= 2 * w.n - 1):
        return "need 1 <= p1 < p2 <= 2n-1"
    if w.p1 != 1 and not primes.is_prime(w.p1):
        return f"p1={w.p1} is neither 1 nor prime"
    if not primes.is_prime(w.p2):
        return f"p2={w.p2} is not prime"
    if not primes.is_prime(2 * w.n + w.p1):
        return f"2n+p1={2 * w.n + w.p1} is not prime"
    if not primes.is_prime(2 * w.n + w.p2):
        return f"2n+p2={2 * w.n + w.p2} is not prime"
    if math.gcd((w.p2 - w.p1) // 2, w.n) != 1:
        return "gcd((p2-p1)/2, n) != 1"
    return None


def check_witness(w: Witness, primes: PrimeSet | None = None) -> bool:
    if primes is None:
        primes = shared_prime_set(4 * w.n)
    return _witness_violation(w, primes) is None


@dataclass(frozen=True, eq=False)
class HamiltonCycle:
    """A cyclic ordering of {1..2n} with every adjacent sum prime."""

    two_n: int
    order: np.ndarray
    witness: Witness | None = None

    def sums(self) -> np.ndarray:
        """sums[i] = order[i] + order[(i+1) mod 2n]."""
        return self.order + np.roll(self.order, -1)

    def canonical(self) -> np.ndarray:
        """Rotate so vertex 1 leads, orient so 1's smaller neighbor is second."""
        pos = int(np.flatnonzero(self.order == 1)[0])
        rolled = np.roll(self.order, -pos)
        if rolled[1] > rolled[-1]:
            rolled = np.roll(rolled[::-1], 1)
        return rolled

    def to_json(self) -> str:
        w = None if self.witness is None else {"p1": self.witness.p1, "p2": self.witness.p2}
        return json.dumps(
            {
                "two_n": self.two_n,
                "witness": w,
                "cycle": self.order.tolist(),
                "sums": self.sums().tolist(),
            },
            separators=(",", ":"),
        )

    def to_dot(self) -> str:
        lines = ["graph G {"]
        nxt = np.roll(self.order, -1)
        lines.extend(f"  {int(u)} -- {int(v)};" for u, v in zip(self.order, nxt))
        lines.append("}")
        return "\n".join(lines) + "\n"


def cycle_from_witness(w: Witness, primes: PrimeSet | None = None) -> HamiltonCycle:
    """The Hamilton cycle walked from D_s union D_t, s=(p1-1)/2, t=(p2-1)/2.

    Closed form of the alternating walk from vertex 1 (its D_s edge first):
    the m-th visited x index is m*d mod n with d = t-s, and each x index a
    is followed by the y index (a - s) mod n. Invalid witnesses are rejected.
    """
    if primes is None:
        primes = shared_prime_set(4 * w.n)
    problem = _witness_violation(w, primes)
    if problem is not None:
        raise ValueError(f"invalid witness {w}: {problem}")
    n = w.n
    s = (w.p1 - 1) // 2
    t = (w.p2 - 1) // 2
    d = (t - s) % n
    m = np.arange(n, dtype=np.int64)
    a = m * d % n
    b = (a - s) % n
    order = np.empty(2 * n, dtype=np.int64)
    order[0::2] = 2 * a + 1
    order[1::2] = 2 * n - 2 * b
    return HamiltonCycle(2 * n, order, w)


def find_witness(n: int, primes: PrimeSet | None = None) -> Witness | None:
    """Lexicographically smallest witness (p1, p2) for G_2n, or None.

    p1 runs over {1} then odd primes ascending; p2 over odd primes in
    (p1, 2n-1]. The 2n-1 bound is inclusive: witness values are odd and
    live in [1, 2n], whose largest odd member is 2n-1.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if primes is None:
        primes = shared_prime_set(4 * n)
    two_n = 2 * n
    is_p = primes.is_prime
    for p1 in range(1, two_n - 2, 2):
        if (p1 == 1 or is_p(p1)) and is_p(two_n + p1):
            for p2 in range(p1 + 2, two_n, 2):
                if (
                    is_p(p2)
                    and is_p(two_n + p2)
                    and math.gcd((p2 - p1) // 2, n) == 1
                ):
                    return Witness(n, p1, p2)
    return None


def validate_cycle(c: HamiltonCycle, primes: PrimeSet | None = None) -> bool:
    """True iff order is a permutation of {1..2n}, every adjacent sum is
    prime, and (when a witness is attached) every sum is one of
    {p1, p2, 2n+p1, 2n+p2}."""
    order = np.asarray(c.order)
    two_n = c.two_n
    if order.ndim != 1 or order.shape[0] != two_n or two_n < 2:
        return False
    if not np.array_equal(np.sort(order), np.arange(1, two_n + 1)):
        return False
    sums = order + np.roll(order, -1)
    if primes is None or primes.limit < 2 * two_n - 1:
        primes = shared_prime_set(2 * two_n)
    if not primes.is_prime_vec(sums).all():
        return False
    if c.witness is not None:
        w = c.witness
        allowed = np.array(
            sorted({w.p1, w.p2, two_n + w.p1, two_n + w.p2}), dtype=np.int64
        )
        if not np.isin(sums, allowed).all():
            return False
    return True


def smallest_hamiltonian_prime_set_check(
    n: int, primes: PrimeSet | None = None
) -> bool:
    """Check that when 2n+1 and 2n+3 are both prime, the witness (1, 3)
    yields a cycle whose sums all lie in {3, 2n+1, 2n+3}.

    No edge has sum 1, so three primes suffice -- the smallest set that can
    carry a Hamilton cycle of G_2n.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if primes is None:
        primes = shared_prime_set(4 * n)
    if not (primes.is_prime(2 * n + 1) and primes.is_prime(2 * n + 3)):
        raise ValueError("2n+1 and 2n+3 must both be prime")
    cycle = cycle_from_witness(Witness(n, 1, 3), primes)
    sums = set(cycle.sums().tolist())
    return sums <= {3, 2 * n + 1, 2 * n + 3}
