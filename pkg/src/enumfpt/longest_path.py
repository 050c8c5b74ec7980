"""Union-enumeration of all simple k-vertex paths via derandomized colorings.

A coloring assigns each vertex one of k colors; a path is colorful when its
k vertices carry k distinct colors.  For one coloring, all colorful paths
are enumerable through a table P(C, u): the predecessors of u on C-colorful
paths ending at u.  A perfect hash family -- a coloring set under which
every k-subset of vertices is rainbow for at least one member -- makes the
per-coloring path sets cover all k-vertex paths, and the union runner
merges them duplicate-free using the constant-time colorfulness test as
the membership probe.

The family construction is a verified greedy set cover for small vertex
counts, composed with prime-modulus first-level maps into a k*k-sized
intermediate range for larger ones.  Perfectness is machine-checked on
every build: exhaustively when the k-subset count is at most 10**6, by
seeded sampling otherwise.  A failed check is a hard error.

A path and its reversal are one solution: streams emit only the
lexicographically smaller orientation, and the membership test is
orientation-blind, so the convention is consistent end to end.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .core import SolutionStream, run_union
from .instances import UndirectedGraph, canonicalize

EXHAUSTIVE_VERIFY_LIMIT = 10**6
GREEDY_DIRECT_LIMIT = 16

Coloring = tuple[int, ...]  # 1-indexed by vertex-1, values in 1..k


class ImperfectFamily(RuntimeError):
    """A generated coloring family failed the perfectness check."""


class InvalidPath(ValueError):
    """A membership probe was handed something that is not a simple path."""


# ---------------------------------------------------------------------------
# perfect hash family
# ---------------------------------------------------------------------------


def _is_rainbow(coloring: Coloring, subset: tuple[int, ...]) -> bool:
    seen = 0
    for v in subset:
        bit = 1 << coloring[v - 1]
        if seen & bit:
            return False
        seen |= bit
    return True


def _greedy_family(n: int, k: int, rng: random.Random) -> list[Coloring]:
    """Greedy set cover over all k-subsets; targeted candidates force progress."""
    uncovered = {s for s in combinations(range(1, n + 1), k)}
    family: list[Coloring] = []
    while uncovered:
        pool: list[Coloring] = []
        for subset in sorted(uncovered)[:3]:
            colors = [rng.randrange(1, k + 1) for _ in range(n)]
            for i, v in enumerate(subset):
                colors[v - 1] = i + 1
            pool.append(tuple(colors))
        for _ in range(32):
            pool.append(tuple(rng.randrange(1, k + 1) for _ in range(n)))
        best: Coloring | None = None
        best_cov: set[tuple[int, ...]] = set()
        for cand in pool:
            cov = {s for s in uncovered if _is_rainbow(cand, s)}
            if best is None or len(cov) > len(best_cov):
                best, best_cov = cand, cov
        assert best is not None and best_cov  # targeted candidates cover >= 1
        family.append(best)
        uncovered -= best_cov
    return family


def _next_prime(n: int) -> int:
    def is_prime(x: int) -> bool:
        if x < 2:
            return False
        d = 2
        while d * d <= x:
            if x % d == 0:
                return False
            d += 1
        return True

    p = n + 1
    while not is_prime(p):
        p += 1
    return p


@lru_cache(maxsize=None)
def build_hash_family(n: int, k: int) -> tuple[Coloring, ...]:
    """A verified perfect hash family of k-colorings of the vertices 1..n.

    Requires k <= n.  The construction is deterministic for a given (n, k),
    so repeated runs enumerate identically.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if k == 1:
        family: list[Coloring] = [tuple(1 for _ in range(n))]
    else:
        rng = random.Random(0xC01091 + 31 * n + k)
        if n <= GREEDY_DIRECT_LIMIT:
            family = _greedy_family(n, k, rng)
        else:
            # two-level composition: (a*v mod p) mod k*k injects any k-subset
            # into the intermediate range for some multiplier a; an inner
            # family perfect on that range finishes the job.
            p = _next_prime(n)
            width = k * k
            inner = _greedy_family(width, k, rng)
            family = []
            for a in range(1, p):
                for colors in inner:
                    family.append(tuple(colors[(a * v % p) % width] for v in range(1, n + 1)))
    verify_hash_family(tuple(family), n, k)
    return tuple(family)


def verify_hash_family(family: Sequence[Coloring], n: int, k: int) -> int:
    """Check perfectness; returns the number of subsets examined.

    Exhaustive when C(n, k) <= 10**6, otherwise a seeded spot check of
    10000 random k-subsets.  Raises :class:`ImperfectFamily` on any miss.
    """
    total = math.comb(n, k)
    if total <= EXHAUSTIVE_VERIFY_LIMIT:
        subsets: Iterator[tuple[int, ...]] = combinations(range(1, n + 1), k)
        examined = total
    else:
        rng = random.Random(0x5EED + n * 131 + k)
        vertices = list(range(1, n + 1))
        subsets = (tuple(sorted(rng.sample(vertices, k))) for _ in range(10000))
        examined = 10000
    for subset in subsets:
        if not any(_is_rainbow(coloring, subset) for coloring in family):
            raise ImperfectFamily(f"no coloring is injective on {subset}")
    return examined


# ---------------------------------------------------------------------------
# per-coloring dynamic program
# ---------------------------------------------------------------------------


def compute_path_table(
    g: UndirectedGraph, k: int, coloring: Coloring
) -> dict[tuple[frozenset[int], int], set[int]]:
    """P(C, u): predecessors of u on C-colorful paths ending at u.

    Base entries come from bichromatic edges; larger color sets are filled
    by one induction step per set, scanning the neighbors of each vertex
    whose own color lies in the set.
    """
    table: dict[tuple[frozenset[int], int], set[int]] = {}
    for u, v in g.edges:
        cu, cv = coloring[u - 1], coloring[v - 1]
        if cu == cv:
            continue
        pair = frozenset((cu, cv))
        table.setdefault((pair, v), set()).add(u)
        table.setdefault((pair, u), set()).add(v)
    for size in range(3, k + 1):
        for colors in combinations(range(1, k + 1), size):
            cset = frozenset(colors)
            for u in g.vertices:
                cu = coloring[u - 1]
                if cu not in cset:
                    continue
                sub = cset - {cu}
                preds = {v for v in g.neighbors(u) if table.get((sub, v))}
                if preds:
                    table[(cset, u)] = preds
    return table


def colorful_path_stream(g: UndirectedGraph, k: int, coloring: Coloring) -> Iterator[str]:
    """All k-vertex colorful paths for one coloring, reversal-folded.

    The k nested loops of the table walk are materialized as an explicit
    cursor stack so the stream can pause mid-iteration.  The walk builds
    sequences end-first; both orientations of a path arise, and only the
    canonical (lexicographically smaller) one is emitted.
    """
    if k < 1 or k > g.n:
        return
    if k == 1:
        for v in g.vertices:
            yield canonicalize((v,), "path")
        return
    table = compute_path_table(g, k, coloring)
    full = frozenset(range(1, k + 1))
    seq: list[int] = []
    stack: list[Iterator[int]] = [iter([v for v in g.vertices if table.get((full, v))])]
    while stack:
        v = next(stack[-1], None)
        if v is None:
            stack.pop()
            if seq:
                seq.pop()
            continue
        seq.append(v)
        if len(seq) == k:
            if tuple(seq) <= tuple(reversed(seq)):
                yield canonicalize(seq, "path")
            seq.pop()
            continue
        depth = len(seq)  # next position to fill
        cset = full - {coloring[s - 1] for s in seq[: depth - 1]}
        stack.append(iter(sorted(table.get((cset, seq[-1]), ()))))


def is_colorful(g: UndirectedGraph, k: int, coloring: Coloring, path: Sequence[int]) -> bool:
    """Would the per-coloring stream produce this path?  O(k).

    Raises :class:`InvalidPath` unless ``path`` is a simple path of k
    vertices in g; the answer itself is orientation-independent.
    """
    path = tuple(path)
    if len(path) != k or len(set(path)) != k:
        raise InvalidPath(f"{path} is not a sequence of {k} distinct vertices")
    for v in path:
        if not 1 <= v <= g.n:
            raise InvalidPath(f"vertex {v} out of range")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise InvalidPath(f"{a} and {b} are not adjacent")
    return len({coloring[v - 1] for v in path}) == k


# ---------------------------------------------------------------------------
# union wiring
# ---------------------------------------------------------------------------


class LongestPathUnionSpec:
    """Union spec: identifiers are the colorings of the hash family."""

    def __init__(self, k: int, family: Sequence[Coloring]):
        self.k = k
        self.family = list(family)

    def identifiers(self, g: UndirectedGraph) -> list[Coloring]:
        return list(self.family)

    def stream_for(self, g: UndirectedGraph, coloring: Coloring) -> Iterator[str]:
        return colorful_path_stream(g, self.k, coloring)

    def member(self, g: UndirectedGraph, coloring: Coloring, solution: str) -> bool:
        path = tuple(int(tok) for tok in solution.split())
        return is_colorful(g, self.k, coloring, path)


def enumerate_longest_paths(
    g: UndirectedGraph,
    k: int,
    verify: bool = False,
    trace: list | None = None,
) -> SolutionStream:
    """All simple paths on exactly k vertices, canonicalized, exactly once."""
    if k < 1 or k > g.n:
        return SolutionStream(iter(()))
    spec = LongestPathUnionSpec(k, build_hash_family(g.n, k))
    return run_union(spec, g, verify=verify, trace=trace)
