"""HTTP API wrapping the core package.

Construction endpoints return JSON bodies; the case analysis returns CSV;
scans stream CSV so multi-hour runs never buffer in memory. Counterexample
and FAILURE rows are data (HTTP 200) -- clients decide what they mean.
"""

from __future__ import annotations

import json
from typing import Iterator, Literal

from fastapi import FastAPI, HTTPException, Path, Query
from fastapi.responses import PlainTextResponse, Response, StreamingResponse

from .. import __version__, graph, hamilton, oracle, residue_cases, scan
from ..matching import greenfield_matching
from .schemas import (
    MAX_GRAPH_N,
    CasesRequest,
    CycleRequest,
    CycleResponse,
    CycleWitness,
    MatchingRequest,
    MatchingResponse,
    ScanRequest,
    TableRowResult,
    ValidateTableRequest,
    ValidateTableResponse,
    WitnessRequest,
    WitnessResponse,
)


def _scan_csv(kind: str, req: ScanRequest) -> Iterator[str]:
    header = scan.WITNESS_HEADER if kind == "witness" else scan.BERTRAND_HEADER
    yield header + "\n"
    for part in scan.iter_scan_chunks(
        kind,
        req.two_n_max,
        chunk=req.chunk,
        threads=req.threads,
        two_n_min=req.two_n_min,
    ):
        yield "".join(scan.format_row(r) + "\n" for r in part)


def create_app() -> FastAPI:
    app = FastAPI(title="primesum", version=__version__)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/matching", response_model=MatchingResponse)
    def matching(req: MatchingRequest) -> MatchingResponse:
        m = greenfield_matching(req.two_n // 2)
        pairs = m.canonical_pairs()
        return MatchingResponse(
            n=m.n, pairs=pairs.tolist(), sums=pairs.sum(axis=1).tolist()
        )

    @app.post("/witness", response_model=WitnessResponse)
    def witness(req: WitnessRequest) -> WitnessResponse:
        w = hamilton.find_witness(req.two_n // 2)
        if w is None:
            raise HTTPException(404, f"no witness pair exists for 2n={req.two_n}")
        return WitnessResponse(two_n=req.two_n, p1=w.p1, p2=w.p2)

    @app.post("/cycle", response_model=CycleResponse)
    def cycle(req: CycleRequest) -> CycleResponse:
        if req.oracle:
            try:
                c = oracle.brute_hamilton(req.two_n)
            except ValueError as exc:
                raise HTTPException(400, str(exc))
            if c is None:
                raise HTTPException(404, f"no Hamilton cycle in G_{req.two_n}")
        else:
            if req.two_n < 4:
                raise HTTPException(400, "witness construction needs two_n >= 4")
            w = hamilton.find_witness(req.two_n // 2)
            if w is None:
                raise HTTPException(404, f"no witness pair exists for 2n={req.two_n}")
            c = hamilton.cycle_from_witness(w)
        witness_out = (
            None
            if c.witness is None
            else CycleWitness(p1=c.witness.p1, p2=c.witness.p2)
        )
        return CycleResponse(
            two_n=c.two_n,
            witness=witness_out,
            cycle=c.order.tolist(),
            sums=c.sums().tolist(),
        )

    @app.get("/graph/{n}")
    def graph_export(
        n: int = Path(ge=1, le=MAX_GRAPH_N),
        fmt: Literal["json", "dot"] = Query("json"),
    ) -> Response:
        g = graph.PrimeSumGraph(n)
        if fmt == "dot":
            return PlainTextResponse(g.export("dot"))
        return Response(g.export("json"), media_type="application/json")

    @app.post("/cases")
    def cases(req: CasesRequest) -> PlainTextResponse:
        if (req.g is None) == (not req.all):
            raise HTTPException(400, "provide exactly one of: g, all")
        try:
            if req.all:
                report = residue_cases.run_full_case_analysis(
                    search_limit=req.search_limit, threads=req.threads
                )
            else:
                report = residue_cases.analyze_forms(
                    residue_cases.forms_for_gap(req.g),
                    req.search_limit,
                    threads=req.threads,
                )
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        return PlainTextResponse(
            report.to_csv(),
            media_type="text/csv",
            headers={"x-failures": str(report.failures)},
        )

    @app.post("/validate-table", response_model=ValidateTableResponse)
    def validate_table(req: ValidateTableRequest) -> ValidateTableResponse:
        results = [
            TableRowResult(
                g=r.g,
                t=r.t,
                p1=r.p1,
                p2=r.p2,
                claimed_s=r.claimed_s,
                ok=residue_cases.validate_paper_row(r.g, r.t, r.p1, r.p2, r.claimed_s),
            )
            for r in req.rows
        ]
        return ValidateTableResponse(
            results=results, all_ok=all(r.ok for r in results)
        )

    def _check_scan(req: ScanRequest) -> None:
        # Validate before streaming starts: a generator failure would abort
        # the response mid-body instead of returning an error status.
        if req.two_n_min > req.two_n_max:
            raise HTTPException(400, "two_n_min must be <= two_n_max")

    @app.post("/scan")
    def scan_witness_csv(req: ScanRequest) -> StreamingResponse:
        _check_scan(req)
        return StreamingResponse(_scan_csv("witness", req), media_type="text/csv")

    @app.post("/bertrand-variant")
    def scan_bertrand_csv(req: ScanRequest) -> StreamingResponse:
        _check_scan(req)
        return StreamingResponse(_scan_csv("bertrand", req), media_type="text/csv")

    return app


app = create_app()
