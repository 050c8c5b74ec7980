"""Generic runners for duplicate-free enumeration over partitioned search spaces.

Five schemes are provided, each consuming a problem-agnostic adapter:

* :func:`run_bounded_tree` -- depth-first traversal of a search tree whose
  breadth and depth are bounded in the parameter; children partition the
  parent's solution set, leaves are drained through the adapter's leaf
  enumerator.
* :func:`run_flashlight` -- the same traversal, but the adapter only emits
  children that are guaranteed to contain a solution, so no branch is
  explored in vain and the depth may grow with the instance.
* :func:`run_solution_search` -- no depth bound at all; each node yields one
  solution and the children partition the remaining solutions.  Solutions
  are emitted before recursing at even depths and after recursing at odd
  depths, which bounds the stretch between consecutive outputs.
* :func:`run_union` -- merges overlapping solution streams duplicate-free by
  pausing a stream whenever a later stream also contains its next candidate.
* :func:`run_iterative_compression` -- grows an instance unit by unit,
  compressing an oversized solution at each step, and enumerates the full
  solution set at the final step.

All runners produce a :class:`SolutionStream`: a pull-based, pausable
producer of canonically encoded solutions.  Streams are single-threaded;
distinct streams may be driven from distinct threads, and pulls from
several streams may be interleaved freely.

The traversals keep an explicit stack of (node, cursor) frames rather than
using call recursion, so a stream can be suspended mid-walk and resumed
later -- the union runner depends on that.
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Iterator, Protocol


class MeasureViolation(RuntimeError):
    """A child's measure failed to decrease strictly: adapter bug."""


class MembershipContradiction(RuntimeError):
    """A deferred solution was never produced by the stream that claimed it."""


class GrowContractViolation(RuntimeError):
    """The growing step returned something that is not a valid solution."""


class SolutionStream:
    """Pull-based producer of canonical solution encodings.

    ``next()`` returns the next solution or ``None`` once exhausted; the
    stream is also a plain iterator.  Position is retained between pulls,
    so a paused stream resumes where it stopped.
    """

    def __init__(self, source: Iterable[str]):
        self._it = iter(source)
        self._exhausted = False

    def next(self) -> str | None:
        if self._exhausted:
            return None
        nxt = next(self._it, None)
        if nxt is None:
            self._exhausted = True
        return nxt

    def __iter__(self) -> Iterator[str]:
        return self

    def __next__(self) -> str:
        nxt = self.next()
        if nxt is None:
            raise StopIteration
        return nxt


def iter_bounded_subsets(items: list, limit: int) -> Iterator[frozenset]:
    """All subsets of ``items`` with at most ``limit`` elements, lexicographic.

    The empty set comes first and every prefix extension follows its base,
    so one subset is emitted per constant number of steps.
    """
    chosen: list = []

    def walk(start: int) -> Iterator[frozenset]:
        yield frozenset(chosen)
        if len(chosen) == limit:
            return
        for idx in range(start, len(items)):
            chosen.append(items[idx])
            yield from walk(idx + 1)
            chosen.pop()

    if limit < 0:
        return iter(())
    return walk(0)


# ---------------------------------------------------------------------------
# partition runners (bounded tree / flashlight)
# ---------------------------------------------------------------------------


class PartitionAdapter(Protocol):
    """Splitting scheme whose children partition the parent's solution set."""

    def measure(self, node) -> int: ...

    def split(self, node) -> list: ...

    def leaf_enum(self, node) -> Iterable[str]: ...


def _run_partition(adapter: PartitionAdapter, root) -> Iterator[str]:
    # stack frames: (node, measure inherited check already done)
    stack: list[tuple[Any, int]] = [(root, -1)]
    while stack:
        node, parent_measure = stack.pop()
        m = adapter.measure(node)
        if parent_measure >= 0 and m >= parent_measure:
            raise MeasureViolation(
                f"measure did not decrease: parent {parent_measure}, child {m}"
            )
        if m == 0:
            yield from adapter.leaf_enum(node)
        else:
            children = adapter.split(node)
            for child in reversed(children):
                stack.append((child, m))


def run_bounded_tree(adapter: PartitionAdapter, root) -> SolutionStream:
    """Enumerate through a parameter-bounded search tree partition."""
    return SolutionStream(_run_partition(adapter, root))


def run_flashlight(adapter: PartitionAdapter, root) -> SolutionStream:
    """Enumerate through a flashlight partition (children pre-checked nonempty)."""
    return SolutionStream(_run_partition(adapter, root))


# ---------------------------------------------------------------------------
# solution search (alternative output)
# ---------------------------------------------------------------------------


class SolutionSearchAdapter(Protocol):
    def find_solution(self, node) -> Any | None: ...

    def split_excluding(self, node, solution) -> list: ...

    def encode(self, solution) -> str: ...


def run_solution_search(
    adapter: SolutionSearchAdapter,
    root,
    trace: list | None = None,
) -> SolutionStream:
    """Enumerate by alternating find-a-solution and split-the-rest steps.

    The found solution is emitted before the recursive descent when the
    depth is even and after it when the depth is odd; ``trace`` (if given)
    collects ``(encoded, depth, phase)`` tuples with phase "pre" or "post".
    """

    def gen() -> Iterator[str]:
        # frames: [node, depth, encoded-or-None, child iterator or None]
        stack: list[list] = [[root, 0, None, None]]
        while stack:
            frame = stack[-1]
            node, depth, encoded, children = frame
            if children is None:
                solution = adapter.find_solution(node)
                if solution is None:
                    stack.pop()
                    continue
                frame[2] = encoded = adapter.encode(solution)
                frame[3] = iter(adapter.split_excluding(node, solution))
                if depth % 2 == 0:
                    if trace is not None:
                        trace.append((encoded, depth, "pre"))
                    yield encoded
                continue
            child = next(children, None)
            if child is not None:
                stack.append([child, depth + 1, None, None])
                continue
            stack.pop()
            if depth % 2 == 1:
                if trace is not None:
                    trace.append((encoded, depth, "post"))
                yield encoded

    return SolutionStream(gen())


# ---------------------------------------------------------------------------
# union enumeration
# ---------------------------------------------------------------------------


class UnionSpec(Protocol):
    def identifiers(self, instance) -> list: ...

    def stream_for(self, instance, ident) -> Iterable[str]: ...

    def member(self, instance, ident, solution: str) -> bool: ...


def run_union(
    spec: UnionSpec,
    instance,
    verify: bool = False,
    trace: list | None = None,
) -> SolutionStream:
    """Merge overlapping per-identifier streams without duplicates.

    A candidate pulled from stream i is emitted only if no later stream's
    membership test claims it; otherwise it is deferred (recorded as
    consumed for stream i) and the walk moves on to stream i+1.  After an
    emission the walk restarts at the first unexhausted stream.  Probes go
    over later identifiers in ascending index order.

    ``trace`` collects ("emit"|"defer", solution, stream_index) events.
    With ``verify`` the runner checks that every deferred solution is
    eventually emitted and that no solution is emitted twice, raising
    :class:`MembershipContradiction` otherwise.
    """

    def gen() -> Iterator[str]:
        idents = list(spec.identifiers(instance))
        count = len(idents)
        streams: list[Iterator[str] | None] = [None] * count
        done = [False] * count
        deferred: dict[str, int] = {}
        emitted: set[str] = set()

        def pull(i: int) -> str | None:
            if streams[i] is None:
                streams[i] = iter(spec.stream_for(instance, idents[i]))
            return next(streams[i], None)  # type: ignore[arg-type]

        base = 0
        while base < count:
            if done[base]:
                base += 1
                continue
            i = base
            while i < count:
                if done[i]:
                    i += 1
                    continue
                candidate = pull(i)
                if candidate is None:
                    done[i] = True
                    if i == base:
                        break
                    i += 1
                    continue
                if any(spec.member(instance, idents[j], candidate) for j in range(i + 1, count)):
                    if trace is not None:
                        trace.append(("defer", candidate, i))
                    if verify:
                        deferred.setdefault(candidate, i)
                    i += 1
                    continue
                if trace is not None:
                    trace.append(("emit", candidate, i))
                if verify:
                    if candidate in emitted:
                        raise MembershipContradiction(
                            f"solution {candidate!r} emitted twice (membership said no overlap)"
                        )
                    emitted.add(candidate)
                    deferred.pop(candidate, None)
                yield candidate
                break
        if verify:
            lost = sorted(set(deferred) - emitted)
            if lost:
                raise MembershipContradiction(
                    f"{len(lost)} deferred solution(s) never re-encountered: {lost[:5]}"
                )

    return SolutionStream(gen())


# ---------------------------------------------------------------------------
# iterative compression
# ---------------------------------------------------------------------------


class CompressionSpec(Protocol):
    """Grow/compress scheme over an instance built unit by unit.

    ``units`` fixes the build order; ``initial`` supplies the trivial
    solution of the empty prefix.  ``grow`` turns a solution of prefix i at
    parameter k into one of prefix i+1 at parameter k+1, and ``compress``
    enumerates the prefix's solutions at parameter k given the oversized
    one.  Structured solutions flow between the steps; ``encode``
    canonicalizes them for output.
    """

    def units(self, instance) -> list: ...

    def initial(self, instance) -> Any: ...

    def grow(self, instance, prefix_len: int, unit, k: int, solution) -> Any: ...

    def compress(
        self, instance, prefix_len: int, k: int, oversized, emit_all: bool
    ) -> Iterable[Any]: ...

    def encode(self, solution) -> str: ...

    def is_solution(self, instance, prefix_len: int, k: int, solution) -> bool: ...


def run_iterative_compression(
    spec: CompressionSpec,
    instance,
    k: int,
    verify: bool = False,
) -> SolutionStream:
    """Grow from the trivial prefix, compressing at every step.

    Intermediate steps run the compressor only to its first solution; if
    any step finds none the whole stream is empty (solvability is monotone
    under taking prefixes).  The final step's compressor runs to exhaustion
    and its output is forwarded verbatim.
    """

    def gen() -> Iterator[str]:
        units = spec.units(instance)
        solution = spec.initial(instance)
        total = len(units)
        if total == 0:
            for sol in spec.compress(instance, 0, k, solution, emit_all=True):
                yield spec.encode(sol)
            return
        for idx, unit in enumerate(units):
            grown = spec.grow(instance, idx, unit, k, solution)
            if verify and not spec.is_solution(instance, idx + 1, k + 1, grown):
                raise GrowContractViolation(
                    f"grow output {grown!r} is not a solution of prefix {idx + 1} "
                    f"at parameter {k + 1}"
                )
            if idx + 1 < total:
                first = next(iter(spec.compress(instance, idx + 1, k, grown, emit_all=False)), None)
                if first is None:
                    return
                solution = first
            else:
                for sol in spec.compress(instance, total, k, grown, emit_all=True):
                    yield spec.encode(sol)

    return SolutionStream(gen())
