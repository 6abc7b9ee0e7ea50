"""Command-line front end.

Exit codes: 0 success, 1 a verification (or ``--check``) failure, 2 bad usage
or configuration. Exact probabilities are always written as ``p/q`` strings;
floats use Python's shortest round-trip repr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import analysis, exactdp, recurrence
from .verify import SUITES, run_suite

log = logging.getLogger("hhht")

DP_CAP = 5000
OUTPUT_DIR_ENV = "HHHT_OUTPUT_DIR"

TABLE_FIELDS = ("n", "delta_exact", "delta_float", "p_bob", "p_alice", "p_tie", "leading_asymptotic", "e_n")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {v}")
    return v


def _resolve(path: str) -> Path:
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = _resolve(out)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from exc
    log.info("wrote %s", path)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_delta(args) -> int:
    n = args.n
    if args.mode == "exact":
        print(recurrence.delta_exact(n))
    else:
        print(repr(recurrence.delta_float_sequence(max(n, 4))[n]))
    return 0


def dist_text(n: int, fmt: str) -> str:
    marginal = exactdp.distribution(n).marginal()
    if fmt == "csv":
        return _csv(((k, str(p)) for k, p in marginal.items()), ("k", "p"))
    doc = {"n": n, "rows": [{"k": k, "p": str(p)} for k, p in marginal.items()]}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _parse_dist(text: str, fmt: str) -> list[Fraction]:
    if fmt == "csv":
        return [Fraction(row["p"]) for row in csv.DictReader(io.StringIO(text))]
    return [Fraction(r["p"]) for r in json.loads(text)["rows"]]


def cmd_dist(args) -> int:
    if args.n > args.cap:
        raise UsageError(f"refusing n={args.n}: above the DP cap of {args.cap} (raise it with --cap)")
    text = dist_text(args.n, args.format)
    _emit(text, args.out)
    if args.check:
        total = sum(_parse_dist(text, args.format), Fraction(0))
        if total != 1:
            print(f"check failed: probabilities sum to {total}", file=sys.stderr)
            return 1
        print("check passed: probabilities sum to 1", file=sys.stderr)
    return 0


def table_rows(max_n: int, cap: int = DP_CAP) -> list[dict]:
    e = recurrence.e_sequence(max_n)
    floats = recurrence.delta_float_sequence(max(max_n, 4))
    outcomes = {o.n: o for o in exactdp.iter_outcomes(min(max_n, cap))}
    rows = []
    for n in range(1, max_n + 1):
        o = outcomes.get(n)
        rows.append({
            "n": n,
            "delta_exact": str(Fraction(e[n] - 1, 1 << (n + 1))),
            "delta_float": repr(floats[n]),
            "p_bob": str(o.p_bob) if o else None,
            "p_alice": str(o.p_alice) if o else None,
            "p_tie": str(o.p_tie) if o else None,
            "leading_asymptotic": repr(analysis.leading_term(n)),
            "e_n": str(e[n]),
        })
    return rows


def table_text(max_n: int, fmt: str, cap: int = DP_CAP) -> str:
    rows = table_rows(max_n, cap)
    if fmt == "csv":
        return _csv(([("" if r[f] is None else r[f]) for f in TABLE_FIELDS] for r in rows), TABLE_FIELDS)
    return json.dumps(rows, sort_keys=True, indent=2) + "\n"


def cmd_table(args) -> int:
    _emit(table_text(args.max_n, args.format, args.cap), args.out)
    return 0


def cmd_verify(args) -> int:
    try:
        reports = run_suite(args.suite, args.max_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2))
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hhht", description="HH-vs-HT coin game: exact gaps and identity checks")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", help="print Delta_n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("dist", help="score-difference distribution (Alice - Bob)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--out", help=f"output file (relative paths resolve against ${OUTPUT_DIR_ENV})")
    p.add_argument("--cap", type=_positive, default=DP_CAP)
    p.add_argument("--check", action="store_true", help="re-parse the output and confirm it sums to 1")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("table", help="table of Delta_n, outcomes and e_n for n = 1..max-n")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--cap", type=_positive, default=DP_CAP, help="largest n that gets win/tie probabilities")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all", *sorted(SUITES)), default="all")
    p.add_argument("--max-n", type=_positive, default=None, help="override the suite's main bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hhht: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
