"""The prime sum graph G_n: vertices {1..n}, edge uv iff u+v is prime.

The graph is implicit -- adjacency is computed from primality on demand and
edges are only materialized for export or small-scale inspection, so n can
grow to scan scale without memory cost.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .primes import PrimeSet, shared_prime_set


@dataclass(frozen=True)
class EdgeClass:
    """All edges of G_n with a fixed endpoint sum m (nonempty only for prime m)."""

    m: int
    edges: tuple[tuple[int, int], ...]


class PrimeSumGraph:
    """Graph on {1..n} joining u and v exactly when u+v is prime."""

    __slots__ = ("n", "primes")

    def __init__(self, n: int, primes: PrimeSet | None = None):
        if n < 1:
            raise ValueError("n must be positive")
        if primes is None:
            primes = shared_prime_set(max(2 * n - 1, 2))
        elif primes.limit < 2 * n - 1:
            raise ValueError("prime set must cover sums up to 2n-1")
        self.n = n
        self.primes = primes

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n}")

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return u != v and self.primes.is_prime(u + v)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return [u for u in range(1, self.n + 1) if u != v and self.primes.is_prime(u + v)]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        sums = np.arange(v + 1, v + self.n + 1, dtype=np.int64)
        sums = sums[sums != 2 * v]  # drop the u = v term
        return int(self.primes.is_prime_vec(sums).sum())

    # -- sum classes: pairs u < v <= n with u+v = m, primality not consulted.
    #    These are the index-arithmetic classes behind E_m; when m is prime
    #    the sum class IS the edge class.

    def sum_class_size(self, m: int) -> int:
        """|{(u,v): u < v <= n, u+v = m}| in closed form: u ranges
        max(1, m-n) .. (m-1)//2."""
        lo = max(1, m - self.n)
        hi = (m - 1) // 2
        return max(0, hi - lo + 1)

    def sum_class_pairs(self, m: int) -> tuple[tuple[int, int], ...]:
        lo = max(1, m - self.n)
        hi = (m - 1) // 2
        return tuple((u, m - u) for u in range(lo, hi + 1))

    def edge_class(self, m: int) -> EdgeClass:
        if m < 3 or not self.primes.is_prime(m):
            return EdgeClass(m, ())
        return EdgeClass(m, self.sum_class_pairs(m))

    def class_sums(self) -> np.ndarray:
        """The prime sums m <= 2n-1 that carry edges."""
        return self.primes.primes_array(3, 2 * self.n - 1)

    def edge_count(self) -> int:
        """Number of edges, summing the closed-form class sizes over prime m."""
        return sum(self.sum_class_size(int(m)) for m in self.class_sums())

    def iter_edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v), u < v, in lexicographic order."""
        for u in range(1, self.n + 1):
            partners = np.arange(2 * u + 1, u + self.n + 1, 2, dtype=np.int64)
            if partners.size:
                for w in partners[self.primes.odd_prime_mask(partners)]:
                    yield u, int(w) - u

    def export(self, format: str) -> str:
        """Serialize the graph; formats: "json", "dot"."""
        if format == "json":
            return json.dumps(
                {"n": self.n, "edges": [[u, v] for u, v in self.iter_edges()]},
                separators=(",", ":"),
            )
        if format == "dot":
            lines = ["graph G {"]
            lines.extend(f"  {u} -- {v};" for u, v in self.iter_edges())
            lines.append("}")
            return "\n".join(lines) + "\n"
        raise ValueError(f"unsupported format: {format!r}")
