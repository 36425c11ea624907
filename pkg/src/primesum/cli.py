"""Command-line client for the prime sum graph service.

Every subcommand talks HTTP: by default to an in-process instance of the
service (no server required), or to a running one via --server URL.
stdout carries data only (JSON/CSV/plain rows, byte-identical across
repeat runs); diagnostics and run summaries go to stderr. Exit codes:
0 success, 1 usage or I/O error, 2 negative mathematical finding
(no witness / no cycle, a counterexample row, a FAILURE row, or an
invalid table row).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

import httpx

_USAGE_ERROR = 1
_NOT_FOUND = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract reserves 2 for
    NOT-FOUND/counterexample, so remap usage errors to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(_USAGE_ERROR, f"{self.prog}: error: {message}\n")


class _Client:
    """httpx-compatible transport: remote server or in-process app."""

    def __init__(self, server: str | None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=None)
        else:
            import warnings

            with warnings.catch_warnings():
                # the in-process client's own import-time deprecation notice
                # is not a diagnostic of this run; keep stderr clean
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import create_app

            self._client = TestClient(create_app(), raise_server_exceptions=False)

    def post(self, path, **kw):
        return self._client.post(path, **kw)

    def get(self, path, **kw):
        return self._client.get(path, **kw)

    def stream(self, method, path, **kw):
        return self._client.stream(method, path, **kw)

    def close(self):
        self._client.close()


def _diag(message: str) -> None:
    print(message, file=sys.stderr)


def _http_error(resp: httpx.Response) -> int:
    try:
        detail = resp.json().get("detail", resp.text)
    except (ValueError, AttributeError):
        detail = resp.text
    if resp.status_code == 404:
        _diag(f"NOT-FOUND: {detail}")
        return _NOT_FOUND
    _diag(f"error ({resp.status_code}): {detail}")
    return _USAGE_ERROR


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# ---------------------------------------------------------------- commands


def _cmd_matching(args, client: _Client) -> int:
    resp = client.post("/matching", json={"two_n": args.two_n})
    if resp.status_code != 200:
        return _http_error(resp)
    body = resp.json()
    if args.json:
        print(_dump(body))
    else:
        for a, b in body["pairs"]:
            print(a, b)
    return 0


def _cycle_dot(cycle: list[int]) -> str:
    lines = ["graph G {"]
    lines.extend(
        f"  {u} -- {v};" for u, v in zip(cycle, cycle[1:] + cycle[:1])
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_cycle(args, client: _Client) -> int:
    resp = client.post(
        "/cycle", json={"two_n": args.two_n, "oracle": bool(args.oracle)}
    )
    if resp.status_code != 200:
        return _http_error(resp)
    body = resp.json()
    if args.json:
        print(_dump(body))
    elif args.dot:
        sys.stdout.write(_cycle_dot(body["cycle"]))
    else:
        print(" ".join(str(v) for v in body["cycle"]))
    return 0


def _cmd_witness(args, client: _Client) -> int:
    resp = client.post("/witness", json={"two_n": args.two_n})
    if resp.status_code != 200:
        return _http_error(resp)
    body = resp.json()
    print(body["p1"], body["p2"])
    return 0


def _cmd_graph(args, client: _Client) -> int:
    resp = client.get(f"/graph/{args.n}", params={"fmt": args.export})
    if resp.status_code != 200:
        return _http_error(resp)
    if args.export == "json":
        print(_dump(resp.json()))
    else:
        sys.stdout.write(resp.text)
    return 0


def _run_scan(args, client: _Client, endpoint: str) -> int:
    body = {
        "two_n_max": args.max,
        "two_n_min": args.min,
        "chunk": args.chunk,
        "threads": args.threads,
    }
    is_witness = endpoint == "/scan"
    started = time.monotonic()
    counterexamples = 0
    max_p1 = 0
    max_p2 = 0
    sink = None
    buffered = ""
    try:
        with client.stream("POST", endpoint, json=body) as resp:
            if resp.status_code != 200:
                resp.read()
                return _http_error(resp)
            sink = open(args.out, "w") if args.out else sys.stdout
            header_seen = False
            for block in resp.iter_text():
                sink.write(block)
                sink.flush()
                buffered += block
                *lines, buffered = buffered.split("\n")
                for line in lines:
                    if not line:
                        continue
                    if not header_seen:
                        header_seen = True
                        continue
                    fields = line.split(",")
                    if line.endswith("," + "COUNTEREXAMPLE"):
                        counterexamples += 1
                    elif is_witness:
                        max_p1 = max(max_p1, int(fields[1]))
                        max_p2 = max(max_p2, int(fields[2]))
                    else:
                        max_p1 = max(max_p1, int(fields[1]))
    finally:
        if sink is not None and sink is not sys.stdout:
            sink.close()
    elapsed_ms = int((time.monotonic() - started) * 1000)
    summary = {"range": [args.min, args.max], "counterexamples": counterexamples}
    if is_witness:
        summary["max_min_p1"] = max_p1
        summary["max_min_p2"] = max_p2
    else:
        summary["max_min_p"] = max_p1
    summary["elapsed_ms"] = elapsed_ms
    _diag(_dump(summary))
    return _NOT_FOUND if counterexamples else 0


def _cmd_scan(args, client: _Client) -> int:
    return _run_scan(args, client, "/scan")


def _cmd_bertrand(args, client: _Client) -> int:
    return _run_scan(args, client, "/bertrand-variant")


def _cmd_cases(args, client: _Client) -> int:
    body = {
        "g": args.g,
        "all": bool(args.all),
        "search_limit": args.limit,
        "threads": args.threads,
    }
    resp = client.post("/cases", json=body)
    if resp.status_code != 200:
        return _http_error(resp)
    text = resp.text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    rows = [line for line in text.splitlines()[1:] if line]
    failures = sum(1 for line in rows if line.endswith(",FAILURE"))
    _diag(_dump({"forms": len(rows), "failures": failures}))
    return _NOT_FOUND if failures else 0


def _cmd_validate_table(args, client: _Client) -> int:
    columns = ["g", "t", "p1", "p2", "claimed_s"]
    try:
        with open(args.file, newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames != columns:
                _diag(f"error: expected CSV header {','.join(columns)}")
                return _USAGE_ERROR
            try:
                rows = [{k: int(r[k]) for k in columns} for r in reader]
            except (TypeError, ValueError) as exc:
                _diag(f"error: bad row in {args.file}: {exc}")
                return _USAGE_ERROR
    except OSError as exc:
        _diag(f"error: {exc}")
        return _USAGE_ERROR
    resp = client.post("/validate-table", json={"rows": rows})
    if resp.status_code != 200:
        return _http_error(resp)
    body = resp.json()
    print(",".join(columns) + ",ok")
    for r in body["results"]:
        print(",".join(str(r[k]) for k in columns) + f",{str(r['ok']).lower()}")
    bad = sum(1 for r in body["results"] if not r["ok"])
    _diag(_dump({"rows": len(body["results"]), "invalid": bad}))
    return _NOT_FOUND if bad else 0


# ----------------------------------------------------------------- parser


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="base URL of a running service (default: in-process)",
    )

    parser = _Parser(prog="primesum", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser(
        "matching", parents=[common], help="prime-sum pair partition of {1..2n}"
    )
    p.add_argument("--two-n", type=int, required=True, help="even size of {1..2n}")
    p.add_argument("--json", action="store_true", help="emit the JSON schema")
    p.set_defaults(func=_cmd_matching)

    p = sub.add_parser(
        "cycle", parents=[common], help="Hamilton cycle of G_2n with prime adjacent sums"
    )
    p.add_argument("--two-n", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit the JSON schema")
    fmt.add_argument("--dot", action="store_true", help="emit DOT graph text")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="exhaustive backtracking instead of the witness construction (two_n <= 32)",
    )
    p.set_defaults(func=_cmd_cycle)

    p = sub.add_parser(
        "witness", parents=[common], help="minimal witness pair (p1, p2) for G_2n"
    )
    p.add_argument("--two-n", type=int, required=True)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser(
        "scan",
        parents=[common],
        help="minimal witness for every even 2n up to a bound (CSV)",
    )
    p.add_argument("--max", type=int, required=True, help="largest even 2n")
    p.add_argument("--min", type=int, default=4, help="restart point (default 4)")
    p.add_argument("--chunk", type=int, default=65536, help="even values per work unit")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", metavar="FILE.csv", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser(
        "bertrand-variant",
        parents=[common],
        help="minimal prime p < 2n with 2n+p prime, for every even 2n (CSV)",
    )
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--min", type=int, default=4)
    p.add_argument("--chunk", type=int, default=65536)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", metavar="FILE.csv")
    p.set_defaults(func=_cmd_bertrand)

    p = sub.add_parser(
        "cases",
        parents=[common],
        help="residue-form case analysis for even prime gaps (CSV)",
    )
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--g", type=int, help="analyze one even gap")
    which.add_argument(
        "--all", action="store_true", help="analyze every even gap 4..246"
    )
    p.add_argument("--limit", type=int, default=10**6, help="p1 search limit")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", metavar="FILE.csv")
    p.set_defaults(func=_cmd_cases)

    p = sub.add_parser(
        "validate-table",
        parents=[common],
        help="validate (g,t,p1,p2,claimed_s) rows from a CSV file",
    )
    p.add_argument("--file", required=True, metavar="rows.csv")
    p.set_defaults(func=_cmd_validate_table)

    p = sub.add_parser(
        "graph", parents=[common], help="export the prime sum graph G_n"
    )
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--export", choices=["dot", "json"], required=True)
    p.set_defaults(func=_cmd_graph)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        client = _Client(args.server)
    except httpx.HTTPError as exc:
        _diag(f"error: cannot reach server: {exc}")
        return _USAGE_ERROR
    try:
        return args.func(args, client)
    except httpx.HTTPError as exc:
        _diag(f"error: transport failure: {exc}")
        return _USAGE_ERROR
    except OSError as exc:
        _diag(f"error: {exc}")
        return _USAGE_ERROR
    finally:
        client.close()


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
