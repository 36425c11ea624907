"""Residue-class case analysis for even prime gaps.

If infinitely many prime pairs (p, p') satisfy p' - p = g for some even
g <= 246 (bounded prime gaps), then for whichever residue form p = gk + t
(gcd(t, g) = 1) occurs infinitely often, a single representative pair
(p1, p2 = p1 + g) turns every large enough such p into a Hamilton-cycle
witness for 2n = p - p1: then n = (g/2)k + s with s = ((t - p1)/2) mod
(g/2), so gcd((p2-p1)/2, n) = gcd(g/2, s) -- a constant that the
representative is chosen to make 1.

The twin gap g = 2 is its own one-form case (handled by forms_for_gap(2));
the full analysis enumerates the gaps 4..g_max, 6170 forms at g_max = 246.
"""

from __future__ import annotations

import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .primes import PrimeSet, shared_prime_set

MAX_GAP = 246
DEFAULT_SEARCH_LIMIT = 10**6


@dataclass(frozen=True)
class ResidueForm:
    """The arithmetic progression gk + t classifying primes modulo g."""

    g: int
    t: int

    def __post_init__(self):
        if self.g % 2 or not 2 <= self.g <= MAX_GAP:
            raise ValueError(f"g must be even in [2, {MAX_GAP}]")
        if not 1 <= self.t <= self.g - 1 or math.gcd(self.t, self.g) != 1:
            raise ValueError("t must lie in [1, g-1] with gcd(t, g) = 1")


@dataclass(frozen=True)
class RepresentativeCase:
    """A pair (p1, p2 = p1 + g) making gcd(g/2, s_residue) = 1 for a form."""

    form: ResidueForm
    p1: int
    p2: int
    s_residue: int


def forms_for_gap(g: int) -> list[ResidueForm]:
    """The phi(g) residue forms of a single even gap g."""
    return [ResidueForm(g, t) for t in range(1, g) if math.gcd(t, g) == 1]


def enumerate_forms(g_max: int) -> list[ResidueForm]:
    """All residue forms for the even gaps 4..g_max (6170 at g_max = 246).

    The twin gap g = 2 has the single form t = 1 and is treated separately
    (forms_for_gap(2)); this enumeration covers the bounded-gap range.
    """
    if g_max % 2 or not 2 <= g_max <= MAX_GAP:
        raise ValueError(f"g_max must be even in [2, {MAX_GAP}]")
    forms: list[ResidueForm] = []
    for g in range(4, g_max + 1, 2):
        forms.extend(forms_for_gap(g))
    return forms


def _s_residue(form: ResidueForm, p1: int) -> int:
    return ((form.t - p1) // 2) % (form.g // 2)


def find_representative(
    form: ResidueForm,
    search_limit: int = DEFAULT_SEARCH_LIMIT,
    primes: PrimeSet | None = None,
) -> RepresentativeCase | None:
    """Smallest p1 in {1} + odd primes <= search_limit with p1 + g prime
    and gcd(g/2, ((t - p1)/2) mod (g/2)) = 1; None if none below the limit."""
    if search_limit < form.g:
        raise ValueError("search_limit must be >= g")
    if primes is None:
        primes = shared_prime_set(search_limit + form.g)
    half = form.g // 2
    for p1 in range(1, search_limit + 1, 2):
        if p1 != 1 and not primes.is_prime(p1):
            continue
        if not primes.is_prime(p1 + form.g):
            continue
        s = _s_residue(form, p1)
        if math.gcd(half, s) == 1:
            return RepresentativeCase(form, p1, p1 + form.g, s)
    return None


def validate_paper_row(
    g: int,
    t: int,
    p1: int,
    p2: int,
    claimed_s: int,
    primes: PrimeSet | None = None,
) -> bool:
    """True iff p2 - p1 = g, p1 is 1 or prime, p2 is prime, and
    ((t - p1)/2) mod (g/2) equals claimed_s with gcd(g/2, claimed_s) = 1."""
    if g < 2 or g % 2 or p2 - p1 != g:
        return False
    if primes is None:
        primes = shared_prime_set(max(p2, 2) + 1)
    if p1 != 1 and (p1 < 2 or not primes.is_prime(p1)):
        return False
    if not primes.is_prime(p2):
        return False
    if (t - p1) % 2:
        return False
    half = g // 2
    if ((t - p1) // 2) % half != claimed_s:
        return False
    return math.gcd(half, claimed_s) == 1


@dataclass(frozen=True)
class CaseRow:
    """One analyzed form; p1 is None when no representative was found."""

    g: int
    t: int
    p1: int | None
    p2: int | None
    s_residue: int | None

    def csv_line(self) -> str:
        if self.p1 is None:
            return f"{self.g},{self.t},,,,FAILURE"
        return f"{self.g},{self.t},{self.p1},{self.p2},{self.s_residue},true"


CSV_HEADER = "g,t,p1,p2,s_residue,gcd_ok"


@dataclass
class CaseReport:
    g_max: int
    search_limit: int
    rows: list[CaseRow]

    @property
    def failures(self) -> int:
        return sum(1 for r in self.rows if r.p1 is None)

    def summary(self) -> dict:
        return {
            "forms": len(self.rows),
            "found": len(self.rows) - self.failures,
            "failures": self.failures,
            "search_limit": self.search_limit,
        }

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(CSV_HEADER + "\n")
        for row in self.rows:
            out.write(row.csv_line() + "\n")
        return out.getvalue()


def _analyze_one(form: ResidueForm, search_limit: int, primes: PrimeSet) -> CaseRow:
    rep = find_representative(form, search_limit, primes)
    if rep is None:
        return CaseRow(form.g, form.t, None, None, None)
    return CaseRow(form.g, form.t, rep.p1, rep.p2, rep.s_residue)


def analyze_forms(
    forms: list[ResidueForm],
    search_limit: int = DEFAULT_SEARCH_LIMIT,
    threads: int = 1,
    primes: PrimeSet | None = None,
) -> CaseReport:
    """Find a representative (or record FAILURE) for each form, in the
    given order. Forms are independent, so the fan-out is embarrassingly
    parallel; the merge keeps input order."""
    if primes is None:
        primes = shared_prime_set(search_limit + MAX_GAP)
    g_max = max((f.g for f in forms), default=0)
    if threads > 1 and len(forms) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(
                pool.map(lambda f: _analyze_one(f, search_limit, primes), forms)
            )
    else:
        rows = [_analyze_one(f, search_limit, primes) for f in forms]
    return CaseReport(g_max, search_limit, rows)


def run_full_case_analysis(
    g_max: int = MAX_GAP,
    search_limit: int = DEFAULT_SEARCH_LIMIT,
    threads: int = 1,
) -> CaseReport:
    """Analyze every form of every even gap 4..g_max."""
    return analyze_forms(enumerate_forms(g_max), search_limit, threads)
