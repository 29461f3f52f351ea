"""Command-line surface.

The CLI is a thin client: every subcommand builds a request, sends it to
the service, and formats the response. By default the service runs
embedded in-process; --url points the same requests at a remote server.
Exit codes: 0 success, 1 verification/validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .errors import KatankitError, ValidationFailure

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2

FORMATS = ("text", "csv", "json")


class _ServiceFailure(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _client(url: str | None):
    if url:
        import httpx

        return httpx.Client(base_url=url)
    import warnings

    with warnings.catch_warnings():
        # starlette warns when backed by httpx 1.x; harmless for in-process use
        warnings.filterwarnings("ignore", message=".*httpx2.*")
        from fastapi.testclient import TestClient

    from .service.app import create_app

    return TestClient(create_app())


def _call(client, method: str, path: str, payload: dict | None = None) -> Any:
    resp = client.request(method, path, json=payload)
    if resp.status_code >= 400:
        try:
            body = resp.json()
        except ValueError:
            raise _ServiceFailure("usage", resp.text) from None
        err = body.get("error", body.get("detail", body))
        if isinstance(err, dict):
            raise _ServiceFailure(err.get("kind", "usage"), str(err.get("message", err)))
        raise _ServiceFailure("usage", str(err))
    return resp.json()


def _emit_json(data: Any) -> None:
    print(json.dumps(data, indent=2))


def _csv_row(values: list[Any]) -> str:
    return ",".join("" if v is None else str(v) for v in values)


def cmd_encrypt(client, args) -> int:
    data = _call(
        client,
        "POST",
        "/encrypt",
        {
            "variant": args.variant,
            "key": args.key,
            "plaintext": args.plaintext,
            "bit_reverse": args.bit_reverse,
        },
    )
    if args.format == "json":
        _emit_json(data)
    elif args.format == "csv":
        print(_csv_row(["variant", "ciphertext"]))
        print(_csv_row([data["variant"], data["ciphertext"]]))
    else:
        print(data["ciphertext"])
    return EXIT_OK


def cmd_decrypt(client, args) -> int:
    data = _call(
        client,
        "POST",
        "/decrypt",
        {
            "variant": args.variant,
            "key": args.key,
            "ciphertext": args.ciphertext,
            "bit_reverse": args.bit_reverse,
        },
    )
    if args.format == "json":
        _emit_json(data)
    elif args.format == "csv":
        print(_csv_row(["variant", "plaintext"]))
        print(_csv_row([data["variant"], data["plaintext"]]))
    else:
        print(data["plaintext"])
    return EXIT_OK


def cmd_keyschedule(client, args) -> int:
    data = _call(client, "POST", "/keyschedule", {"variant": args.variant, "key": args.key})
    if args.format == "json":
        _emit_json(data)
        return EXIT_OK
    if args.format == "csv":
        print(_csv_row(["round", "ka", "kb"]))
        for r, (ka, kb) in enumerate(data["pairs"]):
            print(_csv_row([r, ka, kb]))
        return EXIT_OK
    for r, (ka, kb) in enumerate(data["pairs"]):
        print(f"{r:3d} {ka} {kb}")
    return EXIT_OK


def cmd_ir(client, args) -> int:
    data = _call(client, "GET", "/ir")
    if args.format == "json":
        _emit_json(data)
    elif args.format == "csv":
        print(_csv_row(["round", "ir", "counter_state"]))
        for r, (bit, state) in enumerate(zip(data["bits"], data["counter_states"])):
            print(_csv_row([r, bit, state]))
    else:
        print("".join(str(b) for b in data["bits"]))
    return EXIT_OK


def cmd_verify(client, args) -> int:
    if args.file == "-":
        content = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as fh:
            content = fh.read()
    data = _call(client, "POST", "/verify", {"content": content})
    if args.format == "json":
        _emit_json(data)
    elif args.format == "csv":
        print(_csv_row(["line", "variant", "key", "plaintext", "expected", "actual"]))
        for f in data["failures"]:
            print(
                _csv_row(
                    [f["line"], f["variant"], f["key"], f["plaintext"], f["expected"], f["actual"]]
                )
            )
    else:
        for f in data["failures"]:
            print(
                f"line {f['line']}: {f['variant']} FAIL "
                f"key={f['key']} pt={f['plaintext']} expected={f['expected']} got={f['actual']}"
            )
        print(f"checked={data['checked']} passed={data['passed']} failed={data['failed']}")
    return EXIT_OK if data["failed"] == 0 else EXIT_VALIDATION


def cmd_bench(client, args) -> int:
    data = _call(
        client,
        "POST",
        "/bench",
        {
            "variant": args.variant,
            "engine": args.engine,
            "blocks": args.blocks,
            "reps": args.reps,
            "seed": args.seed,
        },
    )
    if args.format == "json":
        _emit_json(data)
    elif args.format == "csv":
        cols = [
            "variant",
            "engine",
            "blocks",
            "reps",
            "seed",
            "wall_time_s",
            "min_s",
            "max_s",
            "dispersion",
            "throughput_mbps",
        ]
        print(_csv_row(cols))
        print(_csv_row([data[c] for c in cols]))
    else:
        print(f"variant: {data['variant']}")
        print(f"engine: {data['engine']}")
        print(f"blocks: {data['blocks']}  reps: {data['reps']}  seed: {data['seed']}")
        print(
            f"wall time (median): {data['wall_time_s']:.6f} s  "
            f"[min {data['min_s']:.6f}, max {data['max_s']:.6f}]"
        )
        print(f"dispersion (max/min): {data['dispersion']:.4f}")
        print(f"throughput: {data['throughput_mbps']:.4f} Mbps")
        print(f"sample digest: {data['sample_digest']}")
    return EXIT_OK


def cmd_report(client, args) -> int:
    payload: dict[str, Any] = {}
    if args.records:
        with open(args.records, "r", encoding="utf-8") as fh:
            try:
                file_payload = json.load(fh)
            except ValueError as exc:
                raise _ServiceFailure("usage", f"records file is not valid JSON: {exc}") from None
        if isinstance(file_payload, list):
            payload["records"] = file_payload
        else:
            payload["records"] = file_payload.get("records", [])
            payload["comparisons"] = file_payload.get("comparisons", [])
            if file_payload.get("numerator_mode"):
                payload["numerator_mode"] = file_payload["numerator_mode"]
    if args.mode:
        payload["numerator_mode"] = args.mode
    if args.table != "all":
        payload["tables"] = [args.table]
    data = _call(client, "POST", "/report", payload)
    if args.format == "json":
        _emit_json({"tables": data["tables"]})
    elif args.format == "csv":
        print(data["csv"], end="")
    else:
        print(data["text"], end="")
    return EXIT_OK


def cmd_serve(args) -> int:
    try:
        import uvicorn
    except ImportError:
        print("serve requires uvicorn; install the [serve] extra", file=sys.stderr)
        return EXIT_USAGE
    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="katankit",
        description="KATAN/KTANTAN cipher kit: encrypt, verify vectors, bench engines, emit report tables.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--url", help="remote service URL (default: run the service in-process)")
    common.add_argument("--format", choices=FORMATS, default="text", help="output format")

    variant = argparse.ArgumentParser(add_help=False)
    variant.add_argument(
        "--variant",
        required=True,
        help="katan32|katan48|katan64|ktantan32|ktantan48|ktantan64",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encrypt", parents=[common, variant], help="encrypt one block")
    p.add_argument("key", help="20 hex digits")
    p.add_argument("plaintext", help="block_bits/4 hex digits")
    p.add_argument("--bit-reverse", action="store_true", help="reverse bit order on input/output")
    p.set_defaults(handler=cmd_encrypt, needs_client=True)

    p = sub.add_parser("decrypt", parents=[common, variant], help="decrypt one block")
    p.add_argument("key", help="20 hex digits")
    p.add_argument("ciphertext", help="block_bits/4 hex digits")
    p.add_argument("--bit-reverse", action="store_true", help="reverse bit order on input/output")
    p.set_defaults(handler=cmd_decrypt, needs_client=True)

    p = sub.add_parser("keyschedule", parents=[common, variant], help="dump per-round subkey pairs")
    p.add_argument("key", help="20 hex digits")
    p.set_defaults(handler=cmd_keyschedule, needs_client=True)

    p = sub.add_parser("ir", parents=[common], help="dump the 254-bit IR sequence")
    p.set_defaults(handler=cmd_ir, needs_client=True)

    p = sub.add_parser("verify", parents=[common], help="check a vector file against the engine")
    p.add_argument("file", help="vector file path, or - for stdin")
    p.set_defaults(handler=cmd_verify, needs_client=True)

    p = sub.add_parser("bench", parents=[common, variant], help="time an engine on a seeded workload")
    p.add_argument("--engine", default="scalar", help="scalar or bitsliced-N (N lanes)")
    p.add_argument("--blocks", type=int, default=10_000, help="blocks per rep")
    p.add_argument("--reps", type=int, default=5, help="measured repetitions")
    p.add_argument("--seed", type=int, default=1, help="workload seed")
    p.set_defaults(handler=cmd_bench, needs_client=True)

    p = sub.add_parser("report", parents=[common], help="emit the performance tables")
    p.add_argument("--records", help="JSON records file (default: bundled transcribed tables)")
    p.add_argument("--mode", choices=["native", "compat32"], help="throughput numerator convention")
    p.add_argument(
        "--table",
        default="all",
        help="table key to emit (i, ii, iii, iv, v, vi, or a comparison label); default all",
    )
    p.set_defaults(handler=cmd_report, needs_client=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=cmd_serve, needs_client=False)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if not args.needs_client:
            return args.handler(args)
        client = _client(args.url)
        try:
            return args.handler(client, args)
        finally:
            client.close()
    except _ServiceFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION if exc.kind == "validation" else EXIT_USAGE
    except ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except KatankitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
