"""Instance data model, text formats, and canonical solution encodings.

All problem inputs are plain UTF-8 text with a self-describing header line:

    tournament n        followed by one ``u v`` line per arc u -> v
                        (every unordered pair must be oriented exactly once)
    graph n m           followed by m ``u v`` lines
    wgraph n m          followed by m ``u v w`` lines (w >= 1)
                        either graph form may end with ``terminals t`` and a
                        line of t vertex ids
    strings n L sigma   followed by n length-L lines over the alphabet sigma
    ilp k m             followed by m rows of k+1 integers ``a1 .. ak b``
                        (meaning a.x <= b) and a mandatory ``box i lo hi``
                        line for every variable i

Vertices are the integers 1..n.  Instances are immutable after parsing and
may be shared freely across threads.

Solutions are compared only through their canonical text encoding, so every
producer must canonicalize before emitting:

    vertex sets     ascending, space separated          "1 3"
    paths           the lexicographically smaller of the sequence and its
                    reversal, space separated           "1 2 3"
    strings         the raw string                      "ab"
    integer vectors space separated                     "0 -2"
    edge sets       pairs sorted ascending, "u v" within a pair,
                    comma separated                     "1 2,2 3"
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class ParseError(ValueError):
    """Malformed instance text; the message carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvariantError(ValueError):
    """Structurally valid text that violates an instance invariant."""


class UnboundedInstance(InvariantError):
    """An integer system is missing the box bound for some variable."""


# ---------------------------------------------------------------------------
# instance types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tournament:
    """Complete orientation of K_n; ``(u, v) in arcs`` means the arc u -> v."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.arcs:
            if not (1 <= u <= self.n and 1 <= v <= self.n) or u == v:
                raise InvariantError(f"arc ({u}, {v}) out of range")
        for u in range(1, self.n + 1):
            for v in range(u + 1, self.n + 1):
                fwd = (u, v) in self.arcs
                bwd = (v, u) in self.arcs
                if fwd and bwd:
                    raise InvariantError(f"pair {{{u},{v}}} oriented both ways")
                if not fwd and not bwd:
                    raise InvariantError(f"pair {{{u},{v}}} unoriented")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple graph, optionally edge weighted and with a terminal set."""

    n: int
    edges: frozenset[tuple[int, int]]
    weights: Mapping[tuple[int, int], int] | None = None
    terminals: tuple[int, ...] | None = None

    def __post_init__(self):
        for u, v in self.edges:
            if u >= v:
                raise InvariantError(f"edge ({u}, {v}) not normalized (need u < v)")
            if not (1 <= u and v <= self.n):
                raise InvariantError(f"edge ({u}, {v}) out of range")
        if self.weights is not None:
            if set(self.weights) != set(self.edges):
                raise InvariantError("weight map does not match edge set")
            for e, w in self.weights.items():
                if w < 1:
                    raise InvariantError(f"edge {e} has nonpositive weight {w}")
        if self.terminals is not None:
            if len(set(self.terminals)) != len(self.terminals):
                raise InvariantError("duplicate terminal")
            for t in self.terminals:
                if not 1 <= t <= self.n:
                    raise InvariantError(f"terminal {t} out of range")
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", {v: tuple(sorted(ns)) for v, ns in adj.items()})

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]  # type: ignore[attr-defined]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def weight(self, u: int, v: int) -> int:
        assert self.weights is not None
        return self.weights[(min(u, v), max(u, v))]


@dataclass(frozen=True)
class StringSet:
    """Equal-length strings over a fixed alphabet."""

    strings: tuple[str, ...]
    length: int
    alphabet: str

    def __post_init__(self):
        if len(set(self.alphabet)) != len(self.alphabet) or not self.alphabet:
            raise InvariantError("alphabet must be nonempty with distinct characters")
        sigma = set(self.alphabet)
        for i, s in enumerate(self.strings):
            if len(s) != self.length:
                raise InvariantError(f"string {i + 1} has length {len(s)}, expected {self.length}")
            if not set(s) <= sigma:
                raise InvariantError(f"string {i + 1} uses characters outside the alphabet")


@dataclass(frozen=True)
class IlpSystem:
    """Integer system A.x <= b with per-variable box bounds.

    ``nvars`` is the enumeration parameter; every row is (coefficients, b).
    The box rows are representable as ordinary rows but are kept separate so
    their presence for every variable can be enforced.
    """

    nvars: int
    rows: tuple[tuple[tuple[int, ...], int], ...]
    box: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for coeffs, _ in self.rows:
            if len(coeffs) != self.nvars:
                raise InvariantError("row arity does not match variable count")
        if len(self.box) != self.nvars:
            raise UnboundedInstance("box bounds required for every variable")
        for i, (lo, hi) in enumerate(self.box):
            if lo > hi:
                raise InvariantError(f"box for variable {i + 1} is empty ({lo} > {hi})")


Instance = Tournament | UndirectedGraph | StringSet | IlpSystem


# ---------------------------------------------------------------------------
# canonical solution encodings
# ---------------------------------------------------------------------------


def canonicalize(value, kind: str) -> str:
    """Encode a structured solution as its canonical text form."""
    if kind == "vertex-set":
        return " ".join(str(v) for v in sorted(set(value)))
    if kind == "path":
        seq = tuple(int(v) for v in value)
        return " ".join(str(v) for v in min(seq, seq[::-1]))
    if kind == "string":
        return str(value)
    if kind == "int-vector":
        return " ".join(str(int(x)) for x in value)
    if kind == "edge-set":
        pairs = sorted({(min(u, v), max(u, v)) for u, v in value})
        return ",".join(f"{u} {v}" for u, v in pairs)
    raise ValueError(f"unknown solution kind {kind!r}")


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_instance(text: str, kind: str | None = None) -> Instance:
    """Parse instance text; ``kind`` optionally pins the expected header tag."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise ParseError("empty input", 1)
    headno, head = lines[0]
    tokens = head.split()
    tag = tokens[0]
    if kind is not None and tag != kind:
        raise ParseError(f"expected a {kind!r} header, got {tag!r}", headno)
    body = lines[1:]
    if tag == "tournament":
        return _parse_tournament(tokens, headno, body)
    if tag in ("graph", "wgraph"):
        return _parse_graph(tag, tokens, headno, body)
    if tag == "strings":
        return _parse_strings(tokens, headno, body)
    if tag == "ilp":
        return _parse_ilp(tokens, headno, body)
    raise ParseError(f"unknown instance format {tag!r}", headno)


def _parse_tournament(tokens, headno, body) -> Tournament:
    if len(tokens) != 2:
        raise ParseError("tournament header needs a vertex count", headno)
    (n,) = _ints(tokens[1:], headno)
    arcs = set()
    for no, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError("arc line needs exactly two vertices", no)
        u, v = _ints(parts, no)
        if (u, v) in arcs:
            raise ParseError(f"duplicate arc ({u}, {v})", no)
        arcs.add((u, v))
    return Tournament(n, frozenset(arcs))


def _parse_graph(tag, tokens, headno, body) -> UndirectedGraph:
    if len(tokens) != 3:
        raise ParseError(f"{tag} header needs vertex and edge counts", headno)
    n, m = _ints(tokens[1:], headno)
    weighted = tag == "wgraph"
    edges: set[tuple[int, int]] = set()
    weights: dict[tuple[int, int], int] = {}
    idx = 0
    for idx in range(m):
        if idx >= len(body):
            raise ParseError(f"expected {m} edge lines, got {idx}", headno)
        no, ln = body[idx]
        parts = ln.split()
        want = 3 if weighted else 2
        if len(parts) != want:
            raise ParseError(f"edge line needs {want} fields", no)
        vals = _ints(parts, no)
        u, v = vals[0], vals[1]
        if u == v:
            raise InvariantError(f"self-loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in edges:
            raise InvariantError(f"parallel edge {e}")
        edges.add(e)
        if weighted:
            weights[e] = vals[2]
    rest = body[m:]
    terminals: tuple[int, ...] | None = None
    if rest:
        no, ln = rest[0]
        parts = ln.split()
        if parts[0] != "terminals" or len(parts) != 2:
            raise ParseError("expected a 'terminals t' line", no)
        (t,) = _ints(parts[1:], no)
        if len(rest) != 2:
            raise ParseError("expected one line of terminal ids", no)
        tno, tln = rest[1]
        ids = _ints(tln.split(), tno)
        if len(ids) != t:
            raise ParseError(f"expected {t} terminal ids, got {len(ids)}", tno)
        terminals = tuple(sorted(ids))
    return UndirectedGraph(n, frozenset(edges), weights if weighted else None, terminals)


def _parse_strings(tokens, headno, body) -> StringSet:
    if len(tokens) != 4:
        raise ParseError("strings header needs count, length, and alphabet", headno)
    n, length = _ints(tokens[1:3], headno)
    alphabet = tokens[3]
    if len(body) != n:
        raise ParseError(f"expected {n} string lines, got {len(body)}", headno)
    return StringSet(tuple(ln for _, ln in body), length, alphabet)


def _parse_ilp(tokens, headno, body) -> IlpSystem:
    if len(tokens) != 3:
        raise ParseError("ilp header needs variable and row counts", headno)
    k, m = _ints(tokens[1:], headno)
    rows = []
    for idx in range(m):
        if idx >= len(body):
            raise ParseError(f"expected {m} rows, got {idx}", headno)
        no, ln = body[idx]
        vals = _ints(ln.split(), no)
        if len(vals) != k + 1:
            raise ParseError(f"row needs {k + 1} integers", no)
        rows.append((tuple(vals[:k]), vals[k]))
    box: dict[int, tuple[int, int]] = {}
    for no, ln in body[m:]:
        parts = ln.split()
        if parts[0] != "box" or len(parts) != 4:
            raise ParseError("expected a 'box i lo hi' line", no)
        i, lo, hi = _ints(parts[1:], no)
        if not 1 <= i <= k:
            raise ParseError(f"box variable {i} out of range", no)
        if i in box:
            raise ParseError(f"duplicate box line for variable {i}", no)
        box[i] = (lo, hi)
    missing = [i for i in range(1, k + 1) if i not in box]
    if missing:
        raise UnboundedInstance(f"missing box bounds for variables {missing}")
    return IlpSystem(k, tuple(rows), tuple(box[i] for i in range(1, k + 1)))


# ---------------------------------------------------------------------------
# writing (parse . write == identity)
# ---------------------------------------------------------------------------


def write_instance(inst: Instance) -> str:
    if isinstance(inst, Tournament):
        arcs = "".join(f"{u} {v}\n" for u, v in sorted(inst.arcs))
        return f"tournament {inst.n}\n{arcs}"
    if isinstance(inst, UndirectedGraph):
        edges = sorted(inst.edges)
        if inst.weights is not None:
            head = f"wgraph {inst.n} {len(edges)}\n"
            body = "".join(f"{u} {v} {inst.weights[(u, v)]}\n" for u, v in edges)
        else:
            head = f"graph {inst.n} {len(edges)}\n"
            body = "".join(f"{u} {v}\n" for u, v in edges)
        tail = ""
        if inst.terminals is not None:
            ids = " ".join(str(t) for t in inst.terminals)
            tail = f"terminals {len(inst.terminals)}\n{ids}\n"
        return head + body + tail
    if isinstance(inst, StringSet):
        head = f"strings {len(inst.strings)} {inst.length} {inst.alphabet}\n"
        return head + "".join(s + "\n" for s in inst.strings)
    if isinstance(inst, IlpSystem):
        head = f"ilp {inst.nvars} {len(inst.rows)}\n"
        rows = "".join(" ".join(str(c) for c in coeffs) + f" {b}\n" for coeffs, b in inst.rows)
        box = "".join(f"box {i + 1} {lo} {hi}\n" for i, (lo, hi) in enumerate(inst.box))
        return head + rows + box
    raise TypeError(f"cannot serialize {type(inst).__name__}")
