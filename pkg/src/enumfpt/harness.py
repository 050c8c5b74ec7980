"""Delay measurement, random instance generation, and the oracle test driver.

The delay of a stream covers every interval: the time until the first
solution, the gaps between consecutive ones, and the tail after the last.
Reports are advisory on timing (desk-scale constants cannot certify
asymptotics); only set equality against the brute-force oracle gates.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import oracle
from .closest_string import enumerate_center_strings
from .core import SolutionStream
from .fvst import enumerate_fvst
from .ilp import enumerate_ilp
from .instances import (
    IlpSystem,
    Instance,
    StringSet,
    Tournament,
    UndirectedGraph,
    write_instance,
)
from .longest_path import enumerate_longest_paths
from .steiner import enumerate_steiner_trees
from .vertex_cover import enumerate_vertex_covers

PROBLEMS = ("fvst", "closest-string", "ilp", "longest-path", "vertex-cover", "steiner")


def enumerate_solutions(kind: str, instance: Instance, k: int | None = None, verify: bool = False) -> SolutionStream:
    """Dispatch to the per-problem enumerator."""
    if kind == "fvst":
        assert isinstance(instance, Tournament) and k is not None
        return enumerate_fvst(instance, k)
    if kind == "closest-string":
        assert isinstance(instance, StringSet) and k is not None
        return enumerate_center_strings(instance, k)
    if kind == "ilp":
        assert isinstance(instance, IlpSystem)
        return enumerate_ilp(instance)
    if kind == "longest-path":
        assert isinstance(instance, UndirectedGraph) and k is not None
        return enumerate_longest_paths(instance, k, verify=verify)
    if kind == "vertex-cover":
        assert isinstance(instance, UndirectedGraph) and k is not None
        return enumerate_vertex_covers(instance, k, verify=verify)
    if kind == "steiner":
        assert isinstance(instance, UndirectedGraph)
        return enumerate_steiner_trees(instance, verify=verify)
    raise ValueError(f"unknown problem kind {kind!r}")


# ---------------------------------------------------------------------------
# delay measurement
# ---------------------------------------------------------------------------


@dataclass
class DelayReport:
    """Per-run latency profile of a solution stream (monotonic clock, ns)."""

    solution_count: int
    first_solution_ns: int | None
    max_delay_ns: int
    mean_delay_ns: float
    post_last_ns: int
    timestamps: list[int] | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "count": self.solution_count,
            "first_ns": self.first_solution_ns,
            "max_ns": self.max_delay_ns,
            "mean_ns": self.mean_delay_ns,
            "post_last_ns": self.post_last_ns,
        }
        out.update(self.extra)
        return out


def measure(stream: Iterable[str], keep_timestamps: bool = False) -> DelayReport:
    """Pull the stream to exhaustion, timestamping every yield.

    The trailing interval (last solution to exhaustion) and the leading one
    (start to first solution) both count toward the max delay; an empty
    stream has a single interval equal to the total runtime.
    """
    start = time.monotonic_ns()
    stamps: list[int] = []
    for _ in stream:
        stamps.append(time.monotonic_ns())
    end = time.monotonic_ns()
    boundaries = [start] + stamps + [end]
    intervals = [b - a for a, b in zip(boundaries, boundaries[1:])]
    return DelayReport(
        solution_count=len(stamps),
        first_solution_ns=(stamps[0] - start) if stamps else None,
        max_delay_ns=max(intervals),
        mean_delay_ns=sum(intervals) / len(intervals),
        post_last_ns=intervals[-1],
        timestamps=stamps if keep_timestamps else None,
    )


# ---------------------------------------------------------------------------
# instance generation
# ---------------------------------------------------------------------------


def generate(kind: str, seed: int, **params) -> Instance:
    """Deterministic pseudo-random instance; identical seeds give identical
    instances."""
    rng = random.Random(seed)
    if kind == "fvst":
        n = params.get("n", 5)
        arcs = set()
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                arcs.add((u, v) if rng.random() < 0.5 else (v, u))
        return Tournament(n, frozenset(arcs))
    if kind in ("longest-path", "vertex-cover", "steiner"):
        n = params.get("n", 6)
        p = params.get("p", 0.5)
        edges = set()
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                if rng.random() < p:
                    edges.add((u, v))
        if kind != "steiner":
            return UndirectedGraph(n, frozenset(edges))
        wmax = params.get("wmax", 4)
        weights = {e: rng.randint(1, wmax) for e in edges}
        t = min(params.get("terminals", 2), n)
        terminals = tuple(sorted(rng.sample(range(1, n + 1), t)))
        return UndirectedGraph(n, frozenset(edges), weights, terminals)
    if kind == "closest-string":
        n = params.get("n", 3)
        length = params.get("length", 4)
        alphabet = "abcdefgh"[: params.get("sigma", 2)]
        strings = tuple("".join(rng.choice(alphabet) for _ in range(length)) for _ in range(n))
        return StringSet(strings, length, alphabet)
    if kind == "ilp":
        nvars = params.get("nvars", 2)
        nrows = params.get("rows", 3)
        coeff = params.get("coeff", 3)
        width = params.get("width", 6)
        box = []
        for _ in range(nvars):
            lo = rng.randint(-width, 0)
            box.append((lo, lo + rng.randint(0, width)))
        rows = []
        for _ in range(nrows):
            coeffs = tuple(rng.randint(-coeff, coeff) for _ in range(nvars))
            rows.append((coeffs, rng.randint(-coeff, 2 * coeff)))
        return IlpSystem(nvars, tuple(rows), tuple(box))
    raise ValueError(f"unknown problem kind {kind!r}")


def matching_instance(m: int) -> UndirectedGraph:
    """Perfect matching with m edges: 2^m vertex covers at budget k = m."""
    edges = frozenset((2 * i - 1, 2 * i) for i in range(1, m + 1))
    return UndirectedGraph(2 * m, edges)


# ---------------------------------------------------------------------------
# oracle equivalence driver
# ---------------------------------------------------------------------------


@dataclass
class Mismatch:
    kind: str
    seed: int
    k: int | None
    instance_text: str
    duplicates: list[str]
    missing: list[str]
    extraneous: list[str]

    def to_json(self) -> dict:
        return self.__dict__.copy()


@dataclass
class SuiteReport:
    kind: str
    trials: int
    skipped: int
    mismatch: Mismatch | None

    @property
    def passed(self) -> bool:
        return self.mismatch is None


def _trial_setup(kind: str, rng: random.Random, max_n: int | None, max_k: int | None):
    """Per-trial size draw within the oracle guards."""
    if kind == "fvst":
        n = rng.randint(3, max_n or 7)
        return {"n": n}, rng.randint(0, max_k or 3)
    if kind == "closest-string":
        length = rng.randint(1, max_n or 6)
        return (
            {"n": rng.randint(1, 4), "length": length, "sigma": rng.randint(2, 3)},
            rng.randint(0, min(max_k or length, length)),
        )
    if kind == "ilp":
        return {"nvars": rng.randint(1, max_k or 3), "rows": rng.randint(1, 5), "width": rng.randint(0, 7)}, None
    if kind == "longest-path":
        n = rng.randint(2, max_n or 8)
        return {"n": n, "p": rng.uniform(0.3, 0.7)}, rng.randint(1, min(max_k or 4, n))
    if kind == "vertex-cover":
        n = rng.randint(1, max_n or 8)
        return {"n": n, "p": rng.uniform(0.2, 0.6)}, rng.randint(0, min(max_k or n, n))
    if kind == "steiner":
        n = rng.randint(4, max_n or 9)
        return (
            {"n": n, "p": rng.uniform(0.3, 0.5), "terminals": rng.randint(2, min(max_k or 4, n)), "wmax": 4},
            None,
        )
    raise ValueError(f"unknown problem kind {kind!r}")


def equivalence_suite(
    kind: str,
    trials: int,
    seed: int = 1,
    max_n: int | None = None,
    max_k: int | None = None,
    enumerator: Callable[..., Iterable[str]] | None = None,
) -> SuiteReport:
    """Compare enumerated output against the brute-force oracle.

    Runs ``trials`` seeded random instances, skipping any whose oracle
    space trips the guard, and stops at the first mismatch with the
    instance serialized for reproduction.  ``enumerator`` overrides the
    standard dispatch (used by the harness self-test).
    """
    enumerate_fn = enumerator or (lambda inst, k: enumerate_solutions(kind, inst, k))
    skipped = 0
    done = 0
    trial = 0
    while done < trials:
        trial += 1
        trial_seed = seed * 1_000_003 + trial
        rng = random.Random(trial_seed)
        params, k = _trial_setup(kind, rng, max_n, max_k)
        instance = generate(kind, trial_seed, **params)
        try:
            expected = oracle.brute_force(instance, kind, k)
        except oracle.TooLarge:
            skipped += 1
            if skipped > 20 * trials:
                raise
            continue
        produced = list(enumerate_fn(instance, k))
        done += 1
        counts = Counter(produced)
        dupes = sorted(s for s, c in counts.items() if c > 1)
        got = set(produced)
        if dupes or got != expected:
            return SuiteReport(
                kind,
                done,
                skipped,
                Mismatch(
                    kind=kind,
                    seed=trial_seed,
                    k=k,
                    instance_text=write_instance(instance),
                    duplicates=dupes,
                    missing=sorted(expected - got),
                    extraneous=sorted(got - expected),
                ),
            )
    return SuiteReport(kind, done, skipped, None)
