"""Large-range verification scans over even 2n.

Two questions, each answered for every even 2n in a range:

* witness scan -- the minimal witness pair (p1, p2) certifying a Hamilton
  cycle of G_2n, or a COUNTEREXAMPLE marker if none exists;
* the even-gap variant of Bertrand's postulate -- the minimal prime
  p < 2n with 2n + p prime, or COUNTEREXAMPLE.

The kernels are vectorized worklists: a chunk of 2n values is resolved
against ascending candidates with numpy masks, so per-value Python cost is
amortized away. Chunks are independent; plural threads share one read-only
PrimeSet and results are merged in range order, so output is byte-identical
for any chunk size or thread count. A counterexample is data, not an error:
scanning continues, and any hit would falsify the sufficient condition's
universality -- the single most valuable possible output.
"""

from __future__ import annotations

import threading
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

from .primes import PrimeSet, shared_prime_set

DEFAULT_CHUNK = 65536

WITNESS_HEADER = "two_n,p1,p2"
BERTRAND_HEADER = "two_n,p"
COUNTEREXAMPLE = "COUNTEREXAMPLE"


class _OddPrimeFeed:
    """Ascending odd primes 3, 5, 7, ... drawn from a PrimeSet on demand.

    Shared across worker threads; growth is locked, reads are lock-free
    (the list only ever grows).
    """

    def __init__(self, primes: PrimeSet, initial_cap: int = 1 << 16):
        self._primes = primes
        self._cap = min(initial_cap, primes.limit)
        self._vals: list[int] = primes.primes_array(3, self._cap).tolist()
        self._lock = threading.Lock()

    def value(self, i: int) -> int:
        vals = self._vals
        if i < len(vals):
            return vals[i]
        with self._lock:
            while i >= len(self._vals):
                if self._cap >= self._primes.limit:
                    raise IndexError("prime feed exhausted its PrimeSet")
                self._cap = min(self._cap * 4, self._primes.limit)
                self._vals = self._primes.primes_array(3, self._cap).tolist()
        return self._vals[i]


def _min_p2(
    idxs: np.ndarray,
    c: int,
    d_start: int,
    T: np.ndarray,
    N: np.ndarray,
    primes: PrimeSet,
    feed: _OddPrimeFeed,
) -> np.ndarray:
    """For each index (with p1 = c already prime-compatible), the minimal
    valid p2, or 0 where no odd prime d <= 2n-1 works."""
    out = np.zeros(idxs.size, dtype=np.int64)
    pos = np.arange(idxs.size)
    di = d_start
    while pos.size:
        d = feed.value(di)
        di += 1
        alive = d <= T[idxs[pos]] - 1
        pos = pos[alive]
        if not pos.size:
            break
        sub = idxs[pos]
        ok = primes.odd_prime_mask(T[sub] + d)
        ok &= np.gcd(np.int64((d - c) >> 1), N[sub]) == 1
        if ok.any():
            out[pos[ok]] = d
            pos = pos[~ok]
    return out


def _witness_rows(
    T: np.ndarray, primes: PrimeSet, feed: _OddPrimeFeed
) -> list[tuple[int, int | None, int | None]]:
    """Minimal witness per even value of T (ascending), None pair = none."""
    T = np.asarray(T, dtype=np.int64)
    N = T >> 1
    p1 = np.zeros(T.size, dtype=np.int64)
    p2 = np.zeros(T.size, dtype=np.int64)
    unresolved = np.ones(T.size, dtype=bool)
    ci = -1  # -1 encodes the allowed non-prime candidate p1 = 1
    while True:
        live = np.flatnonzero(unresolved)
        if not live.size:
            break
        c = 1 if ci < 0 else feed.value(ci)
        feasible = c <= T[live] - 3  # p2 needs an odd slot above p1
        dead = live[~feasible]
        if dead.size:
            unresolved[dead] = False  # candidates exhausted: counterexample
            live = live[feasible]
        if live.size:
            cand = live[primes.odd_prime_mask(T[live] + c)]
            if cand.size:
                found = _min_p2(cand, c, ci + 1, T, N, primes, feed)
                hit = cand[found > 0]
                if hit.size:
                    p1[hit] = c
                    p2[hit] = found[found > 0]
                    unresolved[hit] = False
        ci += 1
    return [
        (t, a if a else None, b if b else None)
        for t, a, b in zip(T.tolist(), p1.tolist(), p2.tolist())
    ]


def _bertrand_rows(
    T: np.ndarray, primes: PrimeSet, feed: _OddPrimeFeed
) -> list[tuple[int, int | None]]:
    """Minimal prime p < 2n with 2n+p prime, per even value of T.

    p = 2 is checked implicitly: 2n+2 is even and > 2, hence composite, so
    the minimal p is always odd and the odd feed suffices.
    """
    T = np.asarray(T, dtype=np.int64)
    p = np.zeros(T.size, dtype=np.int64)
    unresolved = np.ones(T.size, dtype=bool)
    di = 0
    while True:
        live = np.flatnonzero(unresolved)
        if not live.size:
            break
        d = feed.value(di)
        di += 1
        feasible = d < T[live]
        dead = live[~feasible]
        if dead.size:
            unresolved[dead] = False
            live = live[feasible]
        if live.size:
            hit = live[primes.odd_prime_mask(T[live] + d)]
            if hit.size:
                p[hit] = d
                unresolved[hit] = False
    return [(t, v if v else None) for t, v in zip(T.tolist(), p.tolist())]


def _chunk_arrays(lo: int, hi: int, chunk: int) -> Iterator[np.ndarray]:
    step = 2 * chunk
    for start in range(lo, hi + 1, step):
        yield np.arange(start, min(start + step, hi + 2), 2, dtype=np.int64)


def _ordered_map(func: Callable, items: Iterable, threads: int) -> Iterator:
    """Map with worker threads, yielding results in input order with a
    bounded submission window (keeps memory flat on long scans)."""
    if threads <= 1:
        for item in items:
            yield func(item)
        return
    window = threads * 4
    with ThreadPoolExecutor(max_workers=threads) as pool:
        pending: deque = deque()
        for item in items:
            pending.append(pool.submit(func, item))
            if len(pending) >= window:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()


def _validate_range(two_n_min: int, two_n_max: int) -> tuple[int, int]:
    if two_n_max < 4 or two_n_max % 2:
        raise ValueError("two_n_max must be even and >= 4")
    if two_n_min < 4 or two_n_min % 2:
        raise ValueError("two_n_min must be even and >= 4")
    if two_n_min > two_n_max:
        raise ValueError("two_n_min must be <= two_n_max")
    return two_n_min, two_n_max


def iter_scan_chunks(
    kind: str,
    two_n_max: int,
    *,
    chunk: int = DEFAULT_CHUNK,
    threads: int = 1,
    two_n_min: int = 4,
    primes: PrimeSet | None = None,
) -> Iterator[list[tuple]]:
    """Ordered per-chunk row lists; kind is "witness" or "bertrand"."""
    if kind not in ("witness", "bertrand"):
        raise ValueError(f"unknown scan kind {kind!r}")
    if chunk < 1:
        raise ValueError("chunk must be positive")
    lo, hi = _validate_range(two_n_min, two_n_max)
    # One table covers every sum: 2n + p <= 4n - 1 < 2 * two_n_max.
    if primes is None or primes.limit < 2 * hi:
        primes = shared_prime_set(2 * hi)
    feed = _OddPrimeFeed(primes)
    kernel = _witness_rows if kind == "witness" else _bertrand_rows
    yield from _ordered_map(
        lambda T: kernel(T, primes, feed), _chunk_arrays(lo, hi, chunk), threads
    )


def format_row(row: tuple) -> str:
    """One CSV line; counterexample rows carry the explicit marker."""
    if row[1] is None:
        return f"{row[0]}," + "," * (len(row) - 1) + COUNTEREXAMPLE
    return ",".join(str(v) for v in row)


@dataclass
class ScanReport:
    """Rows plus the derived summary for one scan run."""

    lo: int
    hi: int
    header: str
    rows: list[tuple]
    elapsed_ms: int

    @property
    def counterexamples(self) -> int:
        return sum(1 for r in self.rows if r[1] is None)

    def _column_max(self, col: int) -> int:
        return max((r[col] for r in self.rows if r[1] is not None), default=0)

    def _column_mean(self, col: int) -> float:
        found = [r[col] for r in self.rows if r[1] is not None]
        return sum(found) / len(found) if found else 0.0

    @property
    def max_min_p1(self) -> int:
        return self._column_max(1)

    @property
    def mean_min_p1(self) -> float:
        return self._column_mean(1)

    def summary(self) -> dict:
        out = {"range": [self.lo, self.hi], "counterexamples": self.counterexamples}
        if self.header == WITNESS_HEADER:
            out["max_min_p1"] = self._column_max(1)
            out["max_min_p2"] = self._column_max(2)
        else:
            out["max_min_p"] = self._column_max(1)
        out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_csv(self) -> str:
        lines = [self.header]
        lines.extend(format_row(r) for r in self.rows)
        return "\n".join(lines) + "\n"


def _run_scan(
    kind: str,
    two_n_max: int,
    chunk: int,
    threads: int,
    two_n_min: int,
    primes: PrimeSet | None,
    out_path: str | None,
) -> ScanReport:
    header = WITNESS_HEADER if kind == "witness" else BERTRAND_HEADER
    lo, hi = _validate_range(two_n_min, two_n_max)
    start = time.monotonic()
    rows: list[tuple] = []
    sink = open(out_path, "w") if out_path else None
    try:
        if sink:
            sink.write(header + "\n")
        for part in iter_scan_chunks(
            kind, hi, chunk=chunk, threads=threads, two_n_min=lo, primes=primes
        ):
            rows.extend(part)
            if sink:
                sink.write("".join(format_row(r) + "\n" for r in part))
                sink.flush()  # per-chunk flush: a killed scan resumes by range
    finally:
        if sink:
            sink.close()
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return ScanReport(lo, hi, header, rows, elapsed_ms)


def scan_witnesses(
    two_n_max: int,
    chunk: int = DEFAULT_CHUNK,
    threads: int = 1,
    two_n_min: int = 4,
    primes: PrimeSet | None = None,
    out_path: str | None = None,
) -> ScanReport:
    """Minimal witness (or COUNTEREXAMPLE) for every even 2n in
    [two_n_min, two_n_max]."""
    return _run_scan("witness", two_n_max, chunk, threads, two_n_min, primes, out_path)


def scan_bertrand_variant(
    two_n_max: int,
    chunk: int = DEFAULT_CHUNK,
    threads: int = 1,
    two_n_min: int = 4,
    primes: PrimeSet | None = None,
    out_path: str | None = None,
) -> ScanReport:
    """Minimal prime p < 2n with 2n+p prime (or COUNTEREXAMPLE) for every
    even 2n in [two_n_min, two_n_max]."""
    return _run_scan("bertrand", two_n_max, chunk, threads, two_n_min, primes, out_path)
