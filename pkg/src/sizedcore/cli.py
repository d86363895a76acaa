"""Thin command-line client for the experiment service.

Requests are served in-process by default (no server required); pass
--server to target a running sizedcore-serve instance instead. The CLI
itself contains no search logic: it builds one experiment request,
sends it, and writes the CSV the service returns.
"""

from __future__ import annotations

import argparse
import asyncio
import sys
from pathlib import Path

import httpx

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CONFIG = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4

_CODE_TO_EXIT = {
    "config": EXIT_CONFIG,
    "not_found": EXIT_CONFIG,
    "parse": EXIT_PARSE,
    "budget": EXIT_BUDGET,
    "internal": EXIT_ERROR,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sizedcore",
        description="Run a seeded repeated-search experiment and emit CSV rows",
    )
    parser.add_argument("--input", required=True, help="edge-list file path")
    parser.add_argument(
        "--algo",
        required=True,
        choices=["td", "bu", "critical", "sgreedy", "oracle"],
        help="search algorithm",
    )
    size = parser.add_mutually_exclusive_group(required=True)
    size.add_argument("--t", type=int, help="absolute subgraph size")
    size.add_argument(
        "--t-frac", type=float, help="size as a fraction of n, rounded half up"
    )
    parser.add_argument("--reps", type=int, default=200, help="repetitions")
    parser.add_argument(
        "--seed", type=int, default=0, help="base seed; repetition i uses seed+i"
    )
    parser.add_argument(
        "--no-lcc",
        action="store_true",
        help="keep the whole graph instead of its largest component",
    )
    parser.add_argument("--out", help="write the CSV here instead of stdout")
    parser.add_argument(
        "--restarts", type=int, default=1, help="randomized attempts per k level"
    )
    parser.add_argument("--bu-growth", choices=["max", "random"], default="max")
    parser.add_argument("--td-order", choices=["random", "lowdeg"], default="random")
    parser.add_argument(
        "--server", help="base URL of a running service; default runs in-process"
    )
    return parser


def _build_payload(args: argparse.Namespace) -> dict:
    payload = {
        "path": args.input,
        "algorithm": args.algo,
        "repetitions": args.reps,
        "base_seed": args.seed,
        "lcc": not args.no_lcc,
        "options": {
            "restarts": args.restarts,
            "bu_growth": args.bu_growth,
            "td_order": args.td_order,
        },
    }
    if args.t is not None:
        payload["t"] = args.t
    if args.t_frac is not None:
        payload["t_frac"] = args.t_frac
    return payload


async def _post_in_process(payload: dict) -> httpx.Response:
    from .service.app import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport, base_url="http://sizedcore", timeout=None
    ) as client:
        return await client.post("/experiments", json=payload)


def _post(payload: dict, server: str | None) -> httpx.Response:
    if server is None:
        return asyncio.run(_post_in_process(payload))
    with httpx.Client(base_url=server, timeout=None) as client:
        return client.post("/experiments", json=payload)


def _exit_code_for(response: httpx.Response) -> int:
    try:
        body = response.json()
    except ValueError:
        body = {}
    code = body.get("error", {}).get("code")
    if code is None and response.status_code == 422:
        code = "config"
    return _CODE_TO_EXIT.get(code, EXIT_ERROR)


def _describe_error(response: httpx.Response) -> str:
    try:
        body = response.json()
    except ValueError:
        return f"HTTP {response.status_code}"
    err = body.get("error")
    if err:
        line = f" (line {err['line']})" if err.get("line") is not None else ""
        return f"{err['code']}: {err['message']}{line}"
    return f"HTTP {response.status_code}: {body}"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    payload = _build_payload(args)
    try:
        response = _post(payload, args.server)
    except httpx.HTTPError as exc:
        print(f"sizedcore: transport error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if response.status_code != 200:
        print(f"sizedcore: {_describe_error(response)}", file=sys.stderr)
        return _exit_code_for(response)
    body = response.json()
    if args.out:
        Path(args.out).write_text(body["csv"], encoding="utf-8")
    else:
        sys.stdout.write(body["csv"])
    summary = body["summary"]
    print(
        "sizedcore: {dataset} algo={algo} n={n} m={m} t={t} reps={reps} "
        "mean_core={mc:.3f} upper_bound={ub} optimal={opt:.1%}".format(
            dataset=body["dataset"],
            algo=body["algorithm"],
            n=body["n"],
            m=body["m"],
            t=body["t"],
            reps=len(body["rows"]),
            mc=summary["mean_core_number"],
            ub=body["upper_bound"],
            opt=summary["optimal_fraction"],
        ),
        file=sys.stderr,
    )
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
