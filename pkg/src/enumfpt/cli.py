"""Command-line entry point: solve, check, and bench subcommands.

``solve`` streams canonical solutions to stdout, flushing after every one
so delay is observable from outside without instrumentation.  ``check``
runs the brute-force equivalence suite and writes a reproduction bundle on
mismatch.  ``bench`` runs an instance family, emits one JSON report line
per size, and can render the delay/count curves to an image file.

Exit codes: 0 success (including zero solutions), 1 check mismatch,
2 parse or flag errors, 3 adapter contract violations under --verify.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .core import GrowContractViolation, MeasureViolation, MembershipContradiction
from .harness import DelayReport, enumerate_solutions, equivalence_suite, matching_instance, measure
from .instances import InvariantError, ParseError, parse_instance
from .longest_path import build_hash_family
from .steiner import ProvenanceViolation

INPUT_FORMAT = {
    "fvst": "tournament",
    "closest-string": "strings",
    "ilp": "ilp",
    "longest-path": "graph",
    "vertex-cover": "graph",
    "steiner": "wgraph",
}
NEEDS_K = ("fvst", "closest-string", "longest-path", "vertex-cover")
CONTRACT_ERRORS = (
    MeasureViolation,
    MembershipContradiction,
    GrowContractViolation,
    ProvenanceViolation,
)


def _default_seed() -> int:
    return int(os.environ.get("ENUMFPT_SEED", "1"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="enumfpt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="enumerate solutions of one instance")
    solve.add_argument("--problem", required=True, choices=sorted(INPUT_FORMAT))
    solve.add_argument("--input", required=True, help="instance file")
    solve.add_argument("--k", type=int, help="parameter (ignored for ilp and steiner)")
    solve.add_argument("--limit", type=int, help="stop after N solutions")
    solve.add_argument("--format", choices=("lines", "ndjson"), default="lines")
    solve.add_argument("--stats", help="write a delay report JSON to this file")
    solve.add_argument("--verify", action="store_true", help="enable contract checks")
    solve.add_argument(
        "--family-size-report",
        action="store_true",
        help="report the coloring family size on stderr (longest-path only)",
    )

    check = sub.add_parser("check", help="compare against the brute-force oracle")
    check.add_argument("--problem", required=True, choices=sorted(INPUT_FORMAT))
    check.add_argument("--trials", type=int, default=200)
    check.add_argument("--seed", type=int, default=None)
    check.add_argument("--max-n", type=int, default=None)
    check.add_argument("--max-k", type=int, default=None)
    check.add_argument("--bundle", help="mismatch reproduction file (default repro-<problem>.json)")

    bench = sub.add_parser("bench", help="measure delay over an instance family")
    bench.add_argument("--problem", required=True, choices=sorted(INPUT_FORMAT))
    bench.add_argument("--family", required=True, choices=("matching",))
    bench.add_argument("--range", default="4..14", help="inclusive size range, e.g. 4..14")
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--plot", help="render delay and count curves to this image file")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "check":
            return _cmd_check(args)
        return _cmd_bench(args)
    except BrokenPipeError:
        # downstream consumer (e.g. head) closed the stream: not an error
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except (ParseError, InvariantError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except CONTRACT_ERRORS as exc:
        print(f"contract violation: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def _cmd_solve(args) -> int:
    if args.problem in NEEDS_K and args.k is None:
        print(f"error: --k is required for {args.problem}", file=sys.stderr)
        return 2
    text = Path(args.input).read_text()
    instance = parse_instance(text, INPUT_FORMAT[args.problem])
    if args.problem == "steiner" and getattr(instance, "terminals", None) is None:
        print("error: steiner input needs a terminals block", file=sys.stderr)
        return 2
    if args.problem == "longest-path" and args.family_size_report:
        if 1 <= args.k <= instance.n:
            size = len(build_hash_family(instance.n, args.k))
        else:
            size = 0
        print(f"coloring family size: {size}", file=sys.stderr)

    stream = enumerate_solutions(args.problem, instance, args.k, verify=args.verify)
    start = time.monotonic_ns()
    previous = start
    stamps: list[int] = []
    emitted = 0
    for solution in stream:
        now = time.monotonic_ns()
        stamps.append(now)
        if args.format == "ndjson":
            record = {"solution": solution, "index": emitted, "delay_ns": now - previous}
            print(json.dumps(record), flush=True)
        else:
            print(solution, flush=True)
        previous = now
        emitted += 1
        if args.limit is not None and emitted >= args.limit:
            break
    end = time.monotonic_ns()

    if args.stats:
        boundaries = [start] + stamps + [end]
        intervals = [b - a for a, b in zip(boundaries, boundaries[1:])]
        report = DelayReport(
            solution_count=emitted,
            first_solution_ns=(stamps[0] - start) if stamps else None,
            max_delay_ns=max(intervals),
            mean_delay_ns=sum(intervals) / len(intervals),
            post_last_ns=intervals[-1],
        )
        if args.problem == "longest-path" and 1 <= args.k <= instance.n:
            report.extra["family_size"] = len(build_hash_family(instance.n, args.k))
        Path(args.stats).write_text(json.dumps(report.to_json(), indent=2) + "\n")
    return 0


def _cmd_check(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    report = equivalence_suite(
        args.problem, args.trials, seed=seed, max_n=args.max_n, max_k=args.max_k
    )
    if report.passed:
        print(
            f"{args.problem}: {report.trials} trials against the oracle, "
            f"all equal ({report.skipped} skipped by the size guard)"
        )
        return 0
    bundle = args.bundle or f"repro-{args.problem}.json"
    Path(bundle).write_text(json.dumps(report.mismatch.to_json(), indent=2) + "\n")
    mm = report.mismatch
    print(
        f"{args.problem}: mismatch at seed {mm.seed} "
        f"({len(mm.missing)} missing, {len(mm.duplicates)} duplicate, "
        f"{len(mm.extraneous)} extraneous); bundle written to {bundle}",
        file=sys.stderr,
    )
    return 1


def _cmd_bench(args) -> int:
    if args.family == "matching" and args.problem != "vertex-cover":
        print("error: the matching family is a vertex-cover family", file=sys.stderr)
        return 2
    try:
        lo, hi = args.range.split("..")
        sizes = list(range(int(lo), int(hi) + 1))
    except ValueError:
        print(f"error: bad range {args.range!r}, expected e.g. 4..14", file=sys.stderr)
        return 2
    seed = args.seed if args.seed is not None else _default_seed()
    results = []
    for m in sizes:
        instance = matching_instance(m)
        report = measure(enumerate_solutions("vertex-cover", instance, m))
        line = {
            "problem": args.problem,
            "seed": seed,
            "params": {"family": args.family, "m": m, "k": m},
            "count": report.solution_count,
            "first_ns": report.first_solution_ns,
            "max_ns": report.max_delay_ns,
            "mean_ns": report.mean_delay_ns,
            "pass": report.solution_count == 2**m,
        }
        results.append(line)
        print(json.dumps(line), flush=True)
    if args.plot:
        render_bench_figure(results, args.plot)
    return 0 if all(r["pass"] for r in results) else 1


def render_bench_figure(results: list[dict], path: str) -> None:
    """Log-log delay curve with its fitted slope, and the solution counts."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    sizes = np.array([r["params"]["m"] for r in results], dtype=float)
    delays = np.array([r["max_ns"] for r in results], dtype=float)
    counts = np.array([r["count"] for r in results], dtype=float)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax1.loglog(sizes, delays, "o-", label="max delay")
    if len(sizes) >= 2:
        slope, intercept = np.polyfit(np.log(sizes), np.log(delays), 1)
        ax1.loglog(sizes, np.exp(intercept) * sizes**slope, "--", label=f"slope {slope:.2f}")
    ax1.set_xlabel("family size m")
    ax1.set_ylabel("max delay [ns]")
    ax1.legend()
    ax2.semilogy(sizes, counts, "s-", base=2)
    ax2.set_xlabel("family size m")
    ax2.set_ylabel("solution count")
    fig.suptitle("delay stays polynomial while the output count doubles per step")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
