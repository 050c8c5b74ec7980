import pytest

from enumfpt.harness import generate, matching_instance
from enumfpt.instances import UndirectedGraph, parse_instance
from enumfpt.oracle import oracle_vertex_covers
from enumfpt.vertex_cover import compress_covers, enumerate_vertex_covers, grow_cover, is_cover

EDGE = parse_instance("graph 2 1\n1 2\n")
PATH3 = parse_instance("graph 3 2\n1 2\n2 3\n")
TRIANGLE = parse_instance("graph 3 3\n1 2\n1 3\n2 3\n")


def test_grow_adds_the_new_vertex():
    assert grow_cover(frozenset(), 1) == {1}
    assert grow_cover(frozenset({1}), 2) == {1, 2}


def test_compress_single_edge_k1():
    got = list(compress_covers(EDGE, 2, 1, frozenset({1, 2})))
    assert got == [frozenset({1}), frozenset({2})]


def test_compress_single_edge_k2_order():
    got = list(compress_covers(EDGE, 2, 2, frozenset({1, 2})))
    assert got == [frozenset({1, 2}), frozenset({1}), frozenset({2})]


def test_compress_first_only():
    got = list(compress_covers(EDGE, 2, 2, frozenset({1, 2}), emit_all=False))
    assert got == [frozenset({1, 2})]


def test_compress_respects_frozen_exclusions():
    # edgeless pair: without exclusions the empty base extends to {1} and {2}
    g = parse_instance("graph 2 0\n")
    plain = list(compress_covers(g, 2, 1, frozenset()))
    assert plain == [frozenset(), frozenset({1}), frozenset({2})]
    fenced = list(compress_covers(g, 2, 1, frozenset(), frozen_exclusions=frozenset({2})))
    assert fenced == [frozenset(), frozenset({1})]


def test_compress_cells_reconstructible():
    """Each output determines its cell: dropped part independent, base forced."""
    for seed in range(10):
        g = generate("vertex-cover", 300 + seed, n=6, p=0.5)
        k = 2 + seed % 3
        oversized = frozenset(
            v for v in g.vertices if any(v in e for e in g.edges)
        )  # lazily oversized but a cover
        outputs = list(compress_covers(g, g.n, k, oversized))
        assert len(outputs) == len(set(outputs))
        for cover in outputs:
            dropped = oversized - cover
            assert not any(u in dropped and v in dropped for u, v in g.edges)
            forced = {
                w for u, v in g.edges for w, x in ((u, v), (v, u)) if x in dropped
            } - dropped
            assert forced <= cover


def test_triangle_needs_two():
    assert list(enumerate_vertex_covers(TRIANGLE, 1)) == []


def test_single_edge_k1():
    assert sorted(enumerate_vertex_covers(EDGE, 1)) == ["1", "2"]


def test_two_disjoint_edges_k2():
    g = parse_instance("graph 4 2\n1 2\n3 4\n")
    assert sorted(enumerate_vertex_covers(g, 2)) == ["1 3", "1 4", "2 3", "2 4"]


def test_path3_k1():
    assert list(enumerate_vertex_covers(PATH3, 1)) == ["2"]


def test_edgeless_graph():
    g = parse_instance("graph 2 0\n")
    assert sorted(enumerate_vertex_covers(g, 1)) == ["", "1", "2"]


def test_empty_graph():
    g = UndirectedGraph(0, frozenset())
    assert list(enumerate_vertex_covers(g, 3)) == [""]


@pytest.mark.parametrize("m", [1, 2, 4, 6])
def test_matching_counts(m):
    produced = list(enumerate_vertex_covers(matching_instance(m), m))
    assert len(produced) == len(set(produced)) == 2**m


@pytest.mark.parametrize("seed", range(40))
def test_oracle_equivalence(seed):
    n = 1 + seed % 8
    g = generate("vertex-cover", seed, n=n, p=0.45)
    k = seed % (n + 1)
    produced = list(enumerate_vertex_covers(g, k, verify=True))
    assert len(produced) == len(set(produced))
    assert set(produced) == oracle_vertex_covers(g, k)


def test_introduction_order_independence():
    """Enumerating a relabeled instance gives the relabeled solution set."""
    for seed in range(8):
        g = generate("vertex-cover", 900 + seed, n=6, p=0.5)
        k = 2 + seed % 3
        relabel = {v: g.n + 1 - v for v in g.vertices}
        edges = frozenset(
            (min(relabel[u], relabel[v]), max(relabel[u], relabel[v])) for u, v in g.edges
        )
        mirrored = UndirectedGraph(g.n, edges)
        direct = set(enumerate_vertex_covers(g, k))
        mapped_back = {
            " ".join(str(x) for x in sorted(relabel[int(tok)] for tok in sol.split()))
            for sol in enumerate_vertex_covers(mirrored, k)
        }
        assert direct == mapped_back


def test_monotonicity_of_coverability():
    """A cover of the full graph restricts to a cover of every prefix."""
    for seed in range(10):
        g = generate("vertex-cover", 40 + seed, n=7, p=0.5)
        full = frozenset(v for v in g.vertices if any(v in e for e in g.edges))
        for upto in range(g.n + 1):
            assert is_cover(g, upto, full & frozenset(range(1, upto + 1)))
