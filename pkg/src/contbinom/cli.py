"""Command-line interface: ``contbinom {sum,table,verify,subsets,bench}``.

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 on usage errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from typing import Sequence

from . import continuant as ct
from .identity import DEFAULT_SUBSET_CAP, common_value, identity_report, subset_sums
from .verify import SUITES, run_suite

BOUND_ENV = "CONTBINOM_MAX_BOUND"
DEFAULT_TABLE_LIMIT = 64
DEFAULT_VERIFY_LIMIT = 256
BENCH_POLY_LIMIT = 512
BENCH_DET_LIMIT = 64
FORMATS = ("markdown", "csv", "json")


def _limits() -> tuple[int, int]:
    raw = os.environ.get(BOUND_ENV)
    if raw is None:
        return DEFAULT_TABLE_LIMIT, DEFAULT_VERIFY_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"{BOUND_ENV} must be an integer, got {raw!r}")
    return value, value


def _nonneg(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _markdown(header: Sequence[object], rows: Sequence[Sequence[object]]) -> str:
    lines = ["| " + " | ".join(str(h) for h in header) + " |"]
    lines.append("|" + "|".join("---" for _ in header) + "|")
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _subset_label(subset: Sequence[int]) -> str:
    return "{" + ",".join(str(i) for i in subset) + "}"


# --- renderers -----------------------------------------------------------------


def render_sum(n: int, l: int, fmt: str) -> tuple[str, bool]:
    report = identity_report(n, l)
    if fmt == "json":
        return _json(report.as_dict()), report.equal
    header = ["n", "l", "left", "right", "equal"]
    row = [n, l, report.left, report.right, _bool(report.equal)]
    if fmt == "csv":
        return _csv([header, row]), report.equal
    return _markdown(header, [row]), report.equal


def render_table(n_max: int, l_max: int, fmt: str) -> str:
    grid = [[common_value(n, l) for n in range(1, n_max + 1)] for l in range(1, l_max + 1)]
    if fmt == "json":
        cells = [
            {"l": l, "n": n, "value": grid[l - 1][n - 1]}
            for l in range(1, l_max + 1)
            for n in range(1, n_max + 1)
        ]
        return _json(cells)
    header = ["l\\n"] + list(range(1, n_max + 1))
    rows = [[l] + grid[l - 1] for l in range(1, l_max + 1)]
    if fmt == "csv":
        return _csv([header] + rows)
    return _markdown(header, rows)


def render_subsets(n: int, l: int, fmt: str) -> tuple[str, bool]:
    analysis = subset_sums(n, l, cap=DEFAULT_SUBSET_CAP)
    ok = analysis.records[-1].u == analysis.records[-1].v
    claim = analysis.claim_holds()
    if fmt == "json":
        doc = {
            "n": n,
            "l": l,
            "records": [{"subset": list(r.subset), "u": r.u, "v": r.v} for r in analysis.records],
            "collisions": [
                {"u_subset": list(c.u_subset), "v_subset": list(c.v_subset), "value": c.value}
                for c in analysis.collisions
            ],
            "collision_values": analysis.targets,
            "full_value": analysis.full_value,
            "claim_holds": claim,
        }
        return _json(doc), ok
    records = [[_subset_label(r.subset), r.u, r.v] for r in analysis.records]
    collisions = [
        [_subset_label(c.u_subset), _subset_label(c.v_subset), c.value] for c in analysis.collisions
    ]
    targets = " ".join(str(t) for t in analysis.targets)
    if fmt == "csv":
        out = _csv([["subset", "u", "v"]] + records)
        out += "\n" + _csv([["u_subset", "v_subset", "value"]] + collisions)
        return out, ok
    out = f"n = {n}, l = {l}\n\n"
    out += _markdown(["I", "u_I", "v_I"], records)
    out += "\nCollisions u_I = v_J:\n\n"
    out += _markdown(["I", "J", "value"], collisions)
    out += f"\ncollision values: {targets}\n"
    out += f"full sum: {analysis.full_value}\n"
    out += f"collisions only at 0 or the full sum: {_bool(claim)}\n"
    return out, ok


def render_summary(summary, fmt: str) -> str:
    doc = summary.as_dict()
    if fmt == "json":
        return _json(doc)
    if fmt == "csv":
        out = _csv(
            [["check", "checked", "failed"]]
            + [[c["check"], c["checked"], c["failed"]] for c in doc["checks"]]
            + [["total", doc["checked"], doc["failed"]]]
        )
        if doc["failures"]:
            out += "\n" + _csv(
                [["failed_check", "params"]]
                + [[f["check"], " ".join(f"{k}={v}" for k, v in f["params"].items())] for f in doc["failures"]]
            )
        return out
    out = f"suite: {doc['suite']}\n\n"
    out += _markdown(
        ["check", "checked", "failed"], [[c["check"], c["checked"], c["failed"]] for c in doc["checks"]]
    )
    out += f"\nchecked={doc['checked']} failed={doc['failed']}\n"
    for f in doc["failures"]:
        params = " ".join(f"{k}={v}" for k, v in f["params"].items())
        out += f"FAIL {f['check']} {params}\n"
    return out


# --- commands ------------------------------------------------------------------


def cmd_sum(args, parser) -> int:
    text, ok = render_sum(args.n, args.l, args.format)
    sys.stdout.write(text)
    return 0 if ok else 1


def cmd_table(args, parser) -> int:
    limit, _ = _limits()
    if args.n_max < 1 or args.l_max < 1 or args.n_max > limit or args.l_max > limit:
        parser.error(f"--n-max and --l-max must lie in [1, {limit}] (override with {BOUND_ENV})")
    sys.stdout.write(render_table(args.n_max, args.l_max, args.format))
    return 0


def cmd_verify(args, parser) -> int:
    _, limit = _limits()
    for name in ("n_max", "l_max", "k_max"):
        value = getattr(args, name)
        if value is not None and value > limit:
            parser.error(f"--{name.replace('_', '-')} exceeds the limit {limit} (override with {BOUND_ENV})")
    summary = run_suite(args.suite, jobs=args.jobs, n_max=args.n_max, l_max=args.l_max, k_max=args.k_max)
    sys.stdout.write(render_summary(summary, args.format))
    # timing goes to stderr so stdout stays byte-identical between runs
    print(f"wall_time_ms={summary.wall_time_ms}", file=sys.stderr)
    return 0 if summary.ok else 1


def cmd_subsets(args, parser) -> int:
    if 2 ** (args.l + 1) > DEFAULT_SUBSET_CAP:
        parser.error(f"2^(l+1) subsets exceeds the cap {DEFAULT_SUBSET_CAP}; use l <= 11")
    text, ok = render_subsets(args.n, args.l, args.format)
    sys.stdout.write(text)
    return 0 if ok else 1


def cmd_bench(args, parser) -> int:
    strategies = [ct.ContinuantStrategy(args.strategy)] if args.strategy else list(ct.ContinuantStrategy)
    if args.n > BENCH_POLY_LIMIT:
        parser.error(f"--n must be <= {BENCH_POLY_LIMIT}")
    if args.n > BENCH_DET_LIMIT:
        if args.strategy == ct.ContinuantStrategy.DETERMINANT_ORACLE.value:
            parser.error(f"determinant_oracle supports --n <= {BENCH_DET_LIMIT}")
        skipped = [s for s in strategies if s is ct.ContinuantStrategy.DETERMINANT_ORACLE]
        strategies = [s for s in strategies if s not in skipped]
        for s in skipped:
            print(f"skipped {s.value}: n > {BENCH_DET_LIMIT}")

    outputs = {}
    timings: dict[str, list[float]] = {}
    for s in strategies:
        runs = []
        for _ in range(args.reps):
            t0 = time.perf_counter()
            poly = ct.k_poly(args.n, s)
            runs.append((time.perf_counter() - t0) * 1000.0)
            if outputs.setdefault(s.value, poly) != poly:
                print(f"{s.value} is not deterministic", file=sys.stderr)
                return 1
        timings[s.value] = runs

    reference = next(iter(outputs.values()))
    agree = all(p == reference for p in outputs.values())
    if not agree:
        print("strategies disagree; timings withheld", file=sys.stderr)
        return 1
    print(f"n={args.n} reps={args.reps} degree={reference.degree} agree=true")
    rows = [
        [name, f"{min(runs):.3f}", f"{sum(runs) / len(runs):.3f}"] for name, runs in timings.items()
    ]
    sys.stdout.write(_markdown(["strategy", "best_ms", "mean_ms"], rows))
    return 0


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contbinom",
        description="Exact continuant / binomial-sum toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="markdown")

    p = sub.add_parser("sum", help="both sums at one (n, l)")
    p.set_defaults(handler=cmd_sum, parser=p)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--l", type=_nonneg, required=True)
    fmt(p)

    p = sub.add_parser("table", help="grid of common values, rows l, columns n")
    p.set_defaults(handler=cmd_table, parser=p)
    p.add_argument("--n-max", type=_positive, default=8)
    p.add_argument("--l-max", type=_positive, default=8)
    fmt(p)

    p = sub.add_parser("verify", help="run an invariant sweep")
    p.set_defaults(handler=cmd_verify, parser=p)
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--n-max", type=_nonneg)
    p.add_argument("--l-max", type=_nonneg)
    p.add_argument("--k-max", type=_nonneg)
    p.add_argument("--jobs", type=_positive, default=1)
    fmt(p)

    p = sub.add_parser("subsets", help="subset sums and their collisions")
    p.set_defaults(handler=cmd_subsets, parser=p)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--l", type=_nonneg, required=True)
    fmt(p)

    p = sub.add_parser("bench", help="time the continuant strategies")
    p.set_defaults(handler=cmd_bench, parser=p)
    p.add_argument("--strategy", choices=[s.value for s in ct.ContinuantStrategy])
    p.add_argument("--n", type=_positive, default=64)
    p.add_argument("--reps", type=_positive, default=5)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args, args.parser)


if __name__ == "__main__":
    sys.exit(main())
