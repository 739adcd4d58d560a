"""Command line face: one subcommand per operation, JSON on stdout.

By default a command runs in-process through the same handlers the HTTP
service wraps.  With ``--server URL`` the CLI instead POSTs the request to
a running service and relays its reply, so it degrades to a thin client.
Diagnostics go to stderr; stdout carries exactly one JSON report.

Exit codes: 0 on success, 1 for operand parse errors, 2 for validation
failures (a word that is not Motzkin included), 3 for intervals that do
not address a placement.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import commands
from .grammar import ParseError, parse_location
from .motzkin import MotzkinError
from .placements import LocationError


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would sys.exit(2); route usage problems to exit code 1 instead
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="starword",
                     description="Subword placements and Motzkin words.")
    parser.add_argument("--server", metavar="URL",
                        help="send the command to a running service at URL "
                             "instead of computing locally")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")

    p = sub.add_parser("validate-motzkin", help="check bracket balance")
    p.add_argument("word")

    p = sub.add_parser("encode", help="flatten a bracketed word")
    p.add_argument("word")

    p = sub.add_parser("decode", help="rebuild the bracketed word")
    p.add_argument("word")

    p = sub.add_parser("depth", help="bracket nesting depth")
    p.add_argument("word")

    p = sub.add_parser("path", help="lattice path of a motzkin word")
    p.add_argument("word")

    p = sub.add_parser("occurrences", help="all placements of a subword")
    p.add_argument("subword")
    p.add_argument("host")
    p.add_argument("--bracketed", action="store_true",
                   help="treat operands as bracketed words")

    p = sub.add_parser("classify", help="relation of two placements")
    p.add_argument("host")
    p.add_argument("first", help="interval like 2..6")
    p.add_argument("second", help="interval like 7..8")
    p.add_argument("--bracketed", action="store_true",
                   help="host is a bracketed word, intervals index its "
                        "flattening")
    p.add_argument("--context", action="store_true",
                   help="also print both placements' contexts")

    p = sub.add_parser("oracle-check",
                       help="compare classifier and brute-force oracle")
    p.add_argument("host")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--bracketed", action="store_true")

    p = sub.add_parser("enumerate-motzkin", help="all motzkin words of a length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--alphabet", required=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _local(args) -> tuple[dict, int]:
    cmd = args.command
    if cmd == "validate-motzkin":
        report = commands.validate_motzkin(args.word)
        ok = report["result"]["valid"]
        return report, (commands.EXIT_OK if ok else commands.EXIT_INVALID)
    if cmd == "encode":
        return commands.encode_word(args.word), 0
    if cmd == "decode":
        return commands.decode_word(args.word), 0
    if cmd == "depth":
        return commands.depth_of(args.word), 0
    if cmd == "path":
        return commands.path_of(args.word), 0
    if cmd == "occurrences":
        return commands.occurrences(args.subword, args.host,
                                    bracketed=args.bracketed), 0
    if cmd == "classify":
        return commands.classify(args.host, parse_location(args.first),
                                 parse_location(args.second),
                                 bracketed=args.bracketed,
                                 include_contexts=args.context), 0
    if cmd == "oracle-check":
        return commands.oracle_check(args.host, parse_location(args.first),
                                     parse_location(args.second),
                                     bracketed=args.bracketed), 0
    if cmd == "enumerate-motzkin":
        return commands.enumerate_words(args.length, args.alphabet), 0
    raise AssertionError(f"unhandled command {cmd}")


def _request_for(args) -> tuple[str, dict]:
    cmd = args.command
    if cmd in ("validate-motzkin", "encode", "decode", "depth", "path"):
        return f"/{cmd}", {"word": args.word}
    if cmd == "occurrences":
        return "/occurrences", {"subword": args.subword, "host": args.host,
                                "bracketed": args.bracketed}
    if cmd in ("classify", "oracle-check"):
        first = parse_location(args.first)
        second = parse_location(args.second)
        body = {"host": args.host,
                "first": {"start": first.start, "end": first.end},
                "second": {"start": second.start, "end": second.end},
                "bracketed": args.bracketed}
        if cmd == "classify":
            body["context"] = args.context
        return f"/{cmd}", body
    if cmd == "enumerate-motzkin":
        return "/enumerate-motzkin", {"length": args.length,
                                      "alphabet": args.alphabet}
    raise AssertionError(f"unhandled command {cmd}")


def _remote(server: str, args) -> tuple[dict, int]:
    import httpx

    path, body = _request_for(args)
    resp = httpx.post(server.rstrip("/") + path, json=body, timeout=120.0)
    payload = resp.json()
    if resp.status_code == 200:
        code = commands.EXIT_OK
        if args.command == "validate-motzkin" and not payload["result"]["valid"]:
            code = commands.EXIT_INVALID
        return payload, code
    detail = payload.get("detail")
    if isinstance(detail, dict) and "error" in detail:
        return detail, commands.EXIT_BY_CODE.get(detail["error"]["code"],
                                                 commands.EXIT_INVALID)
    raise RuntimeError(f"service returned {resp.status_code}: {payload}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return commands.EXIT_PARSE

    if args.command == "serve":
        import uvicorn

        from .service import app
        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    try:
        if args.server:
            report, code = _remote(args.server, args)
        else:
            report, code = _local(args)
    except (ParseError, MotzkinError, LocationError, ValueError) as exc:
        report, code = commands.error_report(args.command, exc)
        print(json.dumps(report))
        print(f"error: {exc}", file=sys.stderr)
        return code

    print(json.dumps(report))
    if "error" in report:
        print(f"error: {report['error']['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
