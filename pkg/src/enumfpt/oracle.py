"""Independent brute-force enumerators used as ground truth in tests.

Each oracle exhaustively tests every candidate against the problem's
defining predicate and shares nothing with the scheme adapters beyond
instance parsing and canonical encoding.  A guard refuses instances whose
candidate space exceeds 10**7.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations, product

from .instances import (
    IlpSystem,
    StringSet,
    Tournament,
    UndirectedGraph,
    canonicalize,
)

CANDIDATE_LIMIT = 10**7


class TooLarge(ValueError):
    """The exhaustive search space exceeds the oracle guard."""


def brute_force(instance, kind: str, k: int | None = None) -> set[str]:
    """Canonical solution set of the instance by exhaustive search."""
    if kind == "fvst":
        assert isinstance(instance, Tournament) and k is not None
        return oracle_fvst(instance, k)
    if kind == "closest-string":
        assert isinstance(instance, StringSet) and k is not None
        return oracle_center_strings(instance, k)
    if kind == "ilp":
        assert isinstance(instance, IlpSystem)
        return oracle_ilp(instance)
    if kind == "longest-path":
        assert isinstance(instance, UndirectedGraph) and k is not None
        return oracle_paths(instance, k)
    if kind == "vertex-cover":
        assert isinstance(instance, UndirectedGraph) and k is not None
        return oracle_vertex_covers(instance, k)
    if kind == "steiner":
        assert isinstance(instance, UndirectedGraph)
        return oracle_steiner_trees(instance)
    raise ValueError(f"unknown problem kind {kind!r}")


def _guard(count: int) -> None:
    if count > CANDIDATE_LIMIT:
        raise TooLarge(f"{count} candidates exceed the {CANDIDATE_LIMIT} guard")


def _subsets_upto(items: list[int], k: int):
    for size in range(min(k, len(items)) + 1):
        yield from combinations(items, size)


def _digraph_acyclic(vertices: list[int], arcs: set[tuple[int, int]]) -> bool:
    # Kahn's algorithm on the induced subdigraph
    alive = set(vertices)
    indeg = {v: 0 for v in alive}
    for u, v in arcs:
        if u in alive and v in alive:
            indeg[v] += 1
    queue = [v for v in alive if indeg[v] == 0]
    removed = 0
    while queue:
        v = queue.pop()
        removed += 1
        for u, w in arcs:
            if u == v and w in alive:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
    return removed == len(alive)


def oracle_fvst(t: Tournament, k: int) -> set[str]:
    vertices = list(t.vertices)
    _guard(sum(math.comb(t.n, i) for i in range(min(k, t.n) + 1)))
    arcs = set(t.arcs)
    out = set()
    for cand in _subsets_upto(vertices, k):
        rest = [v for v in vertices if v not in cand]
        if _digraph_acyclic(rest, arcs):
            out.add(canonicalize(cand, "vertex-set"))
    return out


def oracle_center_strings(strings: StringSet, k: int) -> set[str]:
    _guard(len(strings.alphabet) ** strings.length)
    out = set()
    for chars in product(strings.alphabet, repeat=strings.length):
        cand = "".join(chars)
        if all(sum(a != b for a, b in zip(cand, s)) <= k for s in strings.strings):
            out.add(canonicalize(cand, "string"))
    return out


def oracle_ilp(system: IlpSystem) -> set[str]:
    widths = [hi - lo + 1 for lo, hi in system.box]
    _guard(math.prod(widths))
    out = set()
    for point in product(*(range(lo, hi + 1) for lo, hi in system.box)):
        if all(sum(c * x for c, x in zip(coeffs, point)) <= b for coeffs, b in system.rows):
            out.add(canonicalize(point, "int-vector"))
    return out


def oracle_paths(g: UndirectedGraph, k: int) -> set[str]:
    if k < 1 or k > g.n:
        return set()
    count = math.perm(g.n, k)
    _guard(count)
    out = set()
    for seq in permutations(g.vertices, k):
        if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
            out.add(canonicalize(seq, "path"))
    return out


def oracle_vertex_covers(g: UndirectedGraph, k: int) -> set[str]:
    vertices = list(g.vertices)
    _guard(sum(math.comb(g.n, i) for i in range(min(k, g.n) + 1)))
    out = set()
    for cand in _subsets_upto(vertices, k):
        chosen = set(cand)
        if all(u in chosen or v in chosen for u, v in g.edges):
            out.add(canonicalize(cand, "vertex-set"))
    return out


def oracle_steiner_trees(g: UndirectedGraph, terminals: tuple[int, ...] | None = None) -> set[str]:
    """Minimum-weight trees spanning the terminals.

    A candidate tree with vertex set X is a spanning tree of the induced
    subgraph on X, so candidates are enumerated per superset X of the
    terminals: every |X|-1 sized edge subset of the induced subgraph that
    connects all of X.  The minimum weight is taken over all candidates,
    then the set is filtered to it.
    """
    terms = tuple(sorted(terminals if terminals is not None else (g.terminals or ())))
    assert terms, "steiner oracle needs terminals"
    if len(terms) == 1:
        return {canonicalize((), "edge-set")}
    assert g.weights is not None
    free = [v for v in g.vertices if v not in terms]
    total = 0
    for extra_count in range(len(free) + 1):
        for extra in combinations(free, extra_count):
            x = set(terms) | set(extra)
            induced = [e for e in g.edges if e[0] in x and e[1] in x]
            if len(induced) >= len(x) - 1:
                total += math.comb(len(induced), len(x) - 1)
    _guard(total)
    best: int | None = None
    best_trees: set[str] = set()
    for extra_count in range(len(free) + 1):
        for extra in combinations(free, extra_count):
            x = set(terms) | set(extra)
            induced = [e for e in g.edges if e[0] in x and e[1] in x]
            for cand in combinations(induced, len(x) - 1):
                if not _connects(cand, x):
                    continue
                weight = sum(g.weights[e] for e in cand)
                if best is None or weight < best:
                    best = weight
                    best_trees = set()
                if weight == best:
                    best_trees.add(canonicalize(cand, "edge-set"))
    return best_trees


def _connects(edges: tuple[tuple[int, int], ...], vertices: set[int]) -> bool:
    if len(vertices) == 1:
        return True
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == vertices
