"""Iterative-compression enumeration of all vertex covers of size at most k.

The graph is rebuilt vertex by vertex in id order; G_i is the subgraph
induced by {1..i}.  Growing adds the new vertex to the current cover,
giving a cover of G_{i+1} with one vertex too many.  Compression partitions
the covers of G_{i+1} by their intersection with that oversized cover S':
for a split S' = C + F with F independent, the smallest cover avoiding F
is C united with F's neighborhood, and every cover in the cell is that
base plus vertices drawn from outside S' and the base.  Distinct splits
give disjoint cells, so the final full-graph compression emits every cover
exactly once.  Intermediate steps only need the first cover found.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .core import SolutionStream, iter_bounded_subsets, run_iterative_compression
from .instances import UndirectedGraph, canonicalize


def _edges_upto(g: UndirectedGraph, upto: int) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges if v <= upto]


def is_cover(g: UndirectedGraph, upto: int, vertices: frozenset[int]) -> bool:
    return all(u in vertices or v in vertices for u, v in _edges_upto(g, upto))


def grow_cover(cover: frozenset[int], new_vertex: int) -> frozenset[int]:
    """A cover of the next prefix, one vertex larger than necessary."""
    return cover | {new_vertex}


def compress_covers(
    g: UndirectedGraph,
    upto: int,
    k: int,
    oversized: frozenset[int],
    emit_all: bool = True,
    frozen_exclusions: frozenset[int] = frozenset(),
) -> Iterator[frozenset[int]]:
    """Covers of G_upto with at most k vertices, cell by cell.

    Cells are indexed by the kept part C of the oversized cover, iterated
    in decreasing size and lexicographically within a size.  With
    ``emit_all`` false the iteration stops at the first cover.  Vertices in
    ``frozen_exclusions`` are never added during superset extension.
    """
    assert is_cover(g, upto, oversized)
    prefix_edges = _edges_upto(g, upto)
    ordered = sorted(oversized)
    for size in range(len(ordered), -1, -1):
        for kept in combinations(ordered, size):
            chosen = frozenset(kept)
            dropped = oversized - chosen
            if any(u in dropped and v in dropped for u, v in prefix_edges):
                continue  # dropped part not independent: cell is empty
            forced = {
                w
                for u, v in prefix_edges
                for w, x in ((u, v), (v, u))
                if x in dropped and w not in dropped
            }
            base = chosen | forced
            if len(base) > k:
                continue
            if not emit_all:
                yield base
                return
            addable = sorted(
                v
                for v in range(1, upto + 1)
                if v not in base and v not in dropped and v not in frozen_exclusions
            )
            for extra in iter_bounded_subsets(addable, k - len(base)):
                yield base | extra


class VertexCoverCompressionSpec:
    """Compression-scheme wiring for :func:`run_iterative_compression`."""

    def units(self, g: UndirectedGraph) -> list[int]:
        return list(g.vertices)

    def initial(self, g: UndirectedGraph) -> frozenset[int]:
        return frozenset()

    def grow(self, g: UndirectedGraph, prefix_len: int, unit: int, k: int, solution):
        return grow_cover(solution, unit)

    def compress(self, g: UndirectedGraph, prefix_len: int, k: int, oversized, emit_all: bool):
        return compress_covers(g, prefix_len, k, oversized, emit_all=emit_all)

    def encode(self, solution: frozenset[int]) -> str:
        return canonicalize(solution, "vertex-set")

    def is_solution(self, g: UndirectedGraph, prefix_len: int, k: int, solution) -> bool:
        return len(solution) <= k and is_cover(g, prefix_len, solution)


def enumerate_vertex_covers(g: UndirectedGraph, k: int, verify: bool = False) -> SolutionStream:
    """All vertex covers of g with at most k vertices, exactly once each."""
    return run_iterative_compression(VertexCoverCompressionSpec(), g, k, verify=verify)
