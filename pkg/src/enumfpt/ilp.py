"""Solution-search adapter enumerating integer points of a boxed system Ax <= b.

Feasible points are found by depth-first branch and bound over the
variables in index order, trying values ascending inside the (tightened)
box and pruning any partial assignment whose best-case row sums already
exceed a bound.  Splitting on a found point s produces 2k sub-instances:
for each prefix length i, one child fixes x_1..x_i = s_1..s_i and demands
x_{i+1} > s_{i+1}, the other x_{i+1} < s_{i+1}.  All added constraints
merge into one (lower, upper) pair per variable, so a node never carries
more than two tightenings per variable and the children partition the
parent's solutions minus {s}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import SolutionStream, run_solution_search
from .instances import IlpSystem, UnboundedInstance, canonicalize


@dataclass(frozen=True)
class IlpNode:
    """Effective per-variable bounds: the box merged with accumulated cuts."""

    bounds: tuple[tuple[int, int], ...]

    def is_empty(self) -> bool:
        return any(lo > hi for lo, hi in self.bounds)

    def extra_constraints(self, box: tuple[tuple[int, int], ...]) -> int:
        """Tightenings beyond the original box, at most two per variable."""
        return sum(
            (lo > blo) + (hi < bhi)
            for (lo, hi), (blo, bhi) in zip(self.bounds, box)
        )


class IlpAdapter:
    """Solution search partition adapter over :class:`IlpNode`."""

    def __init__(self, system: IlpSystem):
        if len(system.box) != system.nvars:
            raise UnboundedInstance("every variable needs a box bound")
        self.system = system

    def root(self) -> IlpNode:
        return IlpNode(self.system.box)

    def encode(self, solution: tuple[int, ...]) -> str:
        return canonicalize(solution, "int-vector")

    def satisfies(self, point: tuple[int, ...]) -> bool:
        return all(
            sum(c * x for c, x in zip(coeffs, point)) <= b
            for coeffs, b in self.system.rows
        )

    def contains(self, node: IlpNode, point: tuple[int, ...]) -> bool:
        in_box = all(lo <= x <= hi for x, (lo, hi) in zip(point, node.bounds))
        return in_box and self.satisfies(point)

    def find_solution(self, node: IlpNode) -> tuple[int, ...] | None:
        """Lexicographically smallest feasible point of the node, or None."""
        if node.is_empty():
            return None
        k = self.system.nvars
        rows = self.system.rows
        # suffix_min[r][i]: least achievable sum of row r over variables i..k-1
        suffix_min = []
        for coeffs, _ in rows:
            acc = [0] * (k + 1)
            for i in range(k - 1, -1, -1):
                lo, hi = node.bounds[i]
                c = coeffs[i]
                acc[i] = acc[i + 1] + min(c * lo, c * hi)
            suffix_min.append(acc)

        assignment: list[int] = []

        def admissible(i: int, partial: list[int]) -> bool:
            return all(
                partial[r] + suffix_min[r][i] <= b
                for r, (_, b) in enumerate(rows)
            )

        def descend(i: int, partial: list[int]) -> tuple[int, ...] | None:
            if i == k:
                return tuple(assignment)
            lo, hi = node.bounds[i]
            for value in range(lo, hi + 1):
                nxt = [p + coeffs[i] * value for p, (coeffs, _) in zip(partial, rows)]
                if not admissible(i + 1, nxt):
                    continue
                assignment.append(value)
                found = descend(i + 1, nxt)
                if found is not None:
                    return found
                assignment.pop()
            return None

        start = [0] * len(rows)
        if not admissible(0, start):
            return None
        return descend(0, start)

    def split_excluding(
        self, node: IlpNode, solution: tuple[int, ...], prune: bool = True
    ) -> list[IlpNode]:
        """The 2k children excluding ``solution``; empty boxes pruned by default."""
        if not self.contains(node, solution):
            if self.find_solution(node) is None:
                return []
            raise ValueError("split_excluding called with an infeasible point")
        k = self.system.nvars
        children = []
        for i in range(k):
            fixed = tuple(
                (solution[j], solution[j]) if j < i else node.bounds[j]
                for j in range(k)
            )
            lo, hi = fixed[i]
            above = fixed[:i] + ((max(lo, solution[i] + 1), hi),) + fixed[i + 1 :]
            below = fixed[:i] + ((lo, min(hi, solution[i] - 1)),) + fixed[i + 1 :]
            children.append(IlpNode(above))
            children.append(IlpNode(below))
        if prune:
            children = [c for c in children if not c.is_empty()]
        return children


def enumerate_ilp(system: IlpSystem, trace: list | None = None) -> SolutionStream:
    """All integer points satisfying the system, exactly once each."""
    adapter = IlpAdapter(system)
    return run_solution_search(adapter, adapter.root(), trace=trace)
