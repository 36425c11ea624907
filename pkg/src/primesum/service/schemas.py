"""Request/response models for the HTTP API.

Response field order matches the documented JSON schemas, so a compact
dump of any response reproduces them byte-for-byte.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

# Request-size guards: constructions are returned as full JSON bodies, so
# cap them well below scan scale (scans stream instead).
MAX_CONSTRUCT_TWO_N = 2 * 10**6
MAX_GRAPH_N = 10**4
MAX_SCAN_TWO_N = 10**8


def _require_even(v: int) -> int:
    if v % 2:
        raise ValueError("must be even")
    return v


class MatchingRequest(BaseModel):
    two_n: int = Field(ge=2, le=MAX_CONSTRUCT_TWO_N)

    _even = field_validator("two_n")(_require_even)


class MatchingResponse(BaseModel):
    n: int
    pairs: list[list[int]]
    sums: list[int]


class WitnessRequest(BaseModel):
    two_n: int = Field(ge=4, le=MAX_CONSTRUCT_TWO_N)

    _even = field_validator("two_n")(_require_even)


class WitnessResponse(BaseModel):
    two_n: int
    p1: int
    p2: int


class CycleRequest(BaseModel):
    two_n: int = Field(ge=2, le=MAX_CONSTRUCT_TWO_N)
    oracle: bool = False

    _even = field_validator("two_n")(_require_even)


class CycleWitness(BaseModel):
    p1: int
    p2: int


class CycleResponse(BaseModel):
    two_n: int
    witness: CycleWitness | None
    cycle: list[int]
    sums: list[int]


class CasesRequest(BaseModel):
    g: int | None = Field(default=None, ge=2, le=246)
    all: bool = False
    search_limit: int = Field(default=10**6, ge=2, le=10**7)
    threads: int = Field(default=1, ge=1, le=64)


class TableRow(BaseModel):
    g: int
    t: int
    p1: int
    p2: int
    claimed_s: int


class ValidateTableRequest(BaseModel):
    rows: list[TableRow]


class TableRowResult(BaseModel):
    g: int
    t: int
    p1: int
    p2: int
    claimed_s: int
    ok: bool


class ValidateTableResponse(BaseModel):
    results: list[TableRowResult]
    all_ok: bool


class ScanRequest(BaseModel):
    two_n_max: int = Field(ge=4, le=MAX_SCAN_TWO_N)
    two_n_min: int = Field(default=4, ge=4, le=MAX_SCAN_TWO_N)
    chunk: int = Field(default=65536, ge=1, le=10**7)
    threads: int = Field(default=1, ge=1, le=64)

    _even_max = field_validator("two_n_max")(_require_even)
    _even_min = field_validator("two_n_min")(_require_even)
