"""Bounded-tree adapter enumerating feedback vertex sets of a tournament.

A set S is a feedback vertex set if deleting it leaves the tournament
acyclic; for tournaments, acyclic is equivalent to triangle-free.  The
search keeps two disjoint vertex sets per node: ``deleted`` (committed to
the solution) and ``kept`` (excluded from it).  Branching picks a directed
triangle of the undeleted part and moves every nonempty budget-respecting
subset of its non-kept vertices into ``deleted``, the rest into ``kept`` --
at most 7 children.  A node is a leaf once the undeleted part is acyclic or
the budget is exhausted (or ``kept`` itself induces a cycle, a dead end).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .core import SolutionStream, iter_bounded_subsets, run_bounded_tree
from .instances import Tournament, canonicalize

MAX_CHILDREN = 7


@dataclass(frozen=True)
class GfvstNode:
    """Search node: committed deletions, committed keeps, remaining budget."""

    deleted: frozenset[int]
    kept: frozenset[int]
    budget: int

    def __post_init__(self):
        assert not (self.deleted & self.kept)
        assert self.budget >= 0


def find_triangle(t: Tournament, excluded: frozenset[int] = frozenset()) -> tuple[int, int, int] | None:
    """Lexicographically first directed triangle of t with ``excluded`` deleted."""
    alive = [v for v in t.vertices if v not in excluded]
    for a, b, c in combinations(alive, 3):
        if t.has_arc(a, b) and t.has_arc(b, c) and t.has_arc(c, a):
            return (a, b, c)
        if t.has_arc(a, c) and t.has_arc(c, b) and t.has_arc(b, a):
            return (a, c, b)
    return None


def induces_cycle(t: Tournament, vertices: frozenset[int]) -> bool:
    """A tournament restricted to ``vertices`` has a cycle iff a triangle."""
    outside = frozenset(t.vertices) - vertices
    return find_triangle(t, outside) is not None


class FvstAdapter:
    """Bounded search tree partition adapter over :class:`GfvstNode`."""

    def __init__(self, t: Tournament, k: int):
        self.tournament = t
        self.breadth_bound = MAX_CHILDREN
        self.depth_bound = k

    def root(self, k: int) -> GfvstNode:
        return GfvstNode(frozenset(), frozenset(), k)

    def measure(self, node: GfvstNode) -> int:
        t = self.tournament
        if find_triangle(t, node.deleted) is None:
            return 0
        if induces_cycle(t, node.kept):
            return 0
        return node.budget

    def split(self, node: GfvstNode) -> list[GfvstNode]:
        t = self.tournament
        triangle = find_triangle(t, node.deleted)
        assert triangle is not None and node.budget > 0
        tri = frozenset(triangle)
        candidates = sorted(tri - node.kept)
        children = []
        for size in range(1, min(len(candidates), node.budget) + 1):
            for combo in combinations(candidates, size):
                delta = frozenset(combo)
                children.append(
                    GfvstNode(
                        node.deleted | delta,
                        node.kept | (tri - delta),
                        node.budget - size,
                    )
                )
        return children

    def leaf_enum(self, node: GfvstNode) -> Iterator[str]:
        t = self.tournament
        if induces_cycle(t, node.kept) or find_triangle(t, node.deleted) is not None:
            return
        free = sorted(v for v in t.vertices if v not in node.deleted and v not in node.kept)
        for extra in iter_bounded_subsets(free, node.budget):
            yield canonicalize(node.deleted | extra, "vertex-set")


def enumerate_fvst(t: Tournament, k: int) -> SolutionStream:
    """All feedback vertex sets of t with at most k vertices, duplicate-free."""
    adapter = FvstAdapter(t, k)
    return run_bounded_tree(adapter, adapter.root(k))
