"""Flashlight adapter enumerating center strings under Hamming distance.

A center string is within distance k of every input string.  Search nodes
commit a prefix; splitting appends one character and keeps only the
extensions for which a center string still exists.  That existence test --
the flashlight -- is a bounded search tree over per-string residual
budgets: the candidate starts as the first input's suffix, and while some
input exceeds its residual we flip the candidate toward it at one of the
first r+1 mismatch positions, spending one unit of a flip budget.

The node measure is the number of uncommitted positions, so leaves carry
full-length prefixes that the flashlight has already certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import SolutionStream, run_flashlight
from .instances import StringSet, canonicalize


@dataclass(frozen=True)
class PrefixNode:
    """Committed prefix and, per input string, the remaining mismatch budget."""

    prefix: str
    residuals: tuple[int, ...]


def hamming(a: str, b: str) -> int:
    assert len(a) == len(b)
    return sum(1 for x, y in zip(a, b) if x != y)


class ClosestStringAdapter:
    """Flashlight partition adapter over :class:`PrefixNode`.

    ``decide_calls`` counts flashlight invocations; the stretch between two
    emitted solutions is bounded by 2 * L * |alphabet| such calls.
    """

    def __init__(self, strings: StringSet, k: int):
        self.instance = strings
        self.k = k
        self.decide_calls = 0

    def root(self) -> PrefixNode:
        return PrefixNode("", tuple(self.k for _ in self.instance.strings))

    def measure(self, node: PrefixNode) -> int:
        return self.instance.length - len(node.prefix)

    def decide(self, node: PrefixNode) -> bool:
        """Is there a full-length center string extending the node's prefix?"""
        self.decide_calls += 1
        if any(r < 0 for r in node.residuals):
            return False
        if not self.instance.strings:
            return True
        start = len(node.prefix)
        suffixes = [s[start:] for s in self.instance.strings]
        candidate = list(suffixes[0])
        return self._search(candidate, suffixes, node.residuals, node.residuals[0])

    def _search(
        self,
        candidate: list[str],
        suffixes: list[str],
        residuals: tuple[int, ...],
        flips_left: int,
    ) -> bool:
        violator = None
        for j, suffix in enumerate(suffixes):
            if hamming("".join(candidate), suffix) > residuals[j]:
                violator = j
                break
        if violator is None:
            return True
        if flips_left == 0:
            return False
        suffix = suffixes[violator]
        budget = residuals[violator]
        mismatches = [p for p, ch in enumerate(candidate) if ch != suffix[p]]
        for p in mismatches[: budget + 1]:
            old = candidate[p]
            candidate[p] = suffix[p]
            if self._search(candidate, suffixes, residuals, flips_left - 1):
                candidate[p] = old
                return True
            candidate[p] = old
        return False

    def split(self, node: PrefixNode) -> list[PrefixNode]:
        pos = len(node.prefix)
        assert pos < self.instance.length
        children = []
        for ch in self.instance.alphabet:
            residuals = tuple(
                r - (0 if s[pos] == ch else 1)
                for r, s in zip(node.residuals, self.instance.strings)
            )
            if any(r < 0 for r in residuals):
                continue
            child = PrefixNode(node.prefix + ch, residuals)
            if self.decide(child):
                children.append(child)
        return children

    def leaf_enum(self, node: PrefixNode) -> Iterator[str]:
        yield canonicalize(node.prefix, "string")


def enumerate_center_strings(strings: StringSet, k: int) -> SolutionStream:
    """All length-L strings within Hamming distance k of every input string.

    The root is flashlight-checked before any expansion, so every node the
    runner touches is certified to hold at least one solution.
    """
    adapter = ClosestStringAdapter(strings, k)
    root = adapter.root()
    if not adapter.decide(root):
        return SolutionStream(iter(()))
    return run_flashlight(adapter, root)
