import pytest
from hypothesis import given, strategies as st

from enumfpt.harness import generate
from enumfpt.instances import (
    InvariantError,
    ParseError,
    StringSet,
    Tournament,
    UnboundedInstance,
    UndirectedGraph,
    canonicalize,
    parse_instance,
    write_instance,
)


def test_parse_tournament_three_cycle():
    t = parse_instance("tournament 3\n1 2\n2 3\n3 1\n")
    assert isinstance(t, Tournament)
    assert t.n == 3
    assert t.has_arc(1, 2) and t.has_arc(2, 3) and t.has_arc(3, 1)
    assert not t.has_arc(2, 1)


def test_parse_weighted_graph_with_terminals():
    g = parse_instance("wgraph 3 2\n1 2 5\n2 3 5\nterminals 2\n1 3\n")
    assert isinstance(g, UndirectedGraph)
    assert g.weights == {(1, 2): 5, (2, 3): 5}
    assert g.terminals == (1, 3)


def test_parse_strings():
    s = parse_instance("strings 2 2 ab\naa\nbb\n")
    assert isinstance(s, StringSet)
    assert s.strings == ("aa", "bb")
    assert s.alphabet == "ab"


def test_parse_ilp_with_box():
    sys = parse_instance("ilp 2 1\n1 1 1\nbox 1 0 1\nbox 2 0 1\n")
    assert sys.nvars == 2
    assert sys.rows == (((1, 1), 1),)
    assert sys.box == ((0, 1), (0, 1))


def test_tournament_missing_orientation():
    with pytest.raises(InvariantError, match=r"pair \{1,2\} unoriented"):
        parse_instance("tournament 2\n")


def test_tournament_double_orientation():
    with pytest.raises(InvariantError, match="both ways"):
        parse_instance("tournament 2\n1 2\n2 1\n")


def test_parse_error_carries_line_number():
    with pytest.raises(ParseError, match="line 2"):
        parse_instance("tournament 2\n1 x\n")


def test_nonpositive_weight_rejected():
    with pytest.raises(InvariantError, match="nonpositive"):
        parse_instance("wgraph 2 1\n1 2 0\n")


def test_self_loop_and_parallel_edge_rejected():
    with pytest.raises(InvariantError, match="self-loop"):
        parse_instance("graph 2 1\n1 1\n")
    with pytest.raises(InvariantError, match="parallel"):
        parse_instance("graph 2 2\n1 2\n2 1\n")


def test_missing_box_is_unbounded():
    with pytest.raises(UnboundedInstance):
        parse_instance("ilp 2 1\n1 1 3\nbox 1 0 1\n")


def test_string_length_mismatch():
    with pytest.raises(InvariantError, match="length"):
        parse_instance("strings 1 3 ab\nab\n")


def test_string_alphabet_mismatch():
    with pytest.raises(InvariantError, match="alphabet"):
        parse_instance("strings 1 2 ab\nax\n")


def test_kind_pinning():
    with pytest.raises(ParseError, match="expected"):
        parse_instance("graph 2 0\n", kind="tournament")


def test_unknown_header():
    with pytest.raises(ParseError, match="unknown instance format"):
        parse_instance("mystery 3\n")


@given(st.sampled_from(["fvst", "longest-path", "steiner", "closest-string", "ilp"]), st.integers(0, 10_000))
def test_write_parse_round_trip(kind, seed):
    inst = generate(kind, seed)
    assert parse_instance(write_instance(inst)) == inst


# canonical encodings -------------------------------------------------------


def test_canonical_examples():
    assert canonicalize({3, 1}, "vertex-set") == "1 3"
    assert canonicalize((3, 2, 1), "path") == "1 2 3"
    assert canonicalize({(2, 3), (1, 2)}, "edge-set") == "1 2,2 3"
    assert canonicalize("ab", "string") == "ab"
    assert canonicalize((0, -2), "int-vector") == "0 -2"
    assert canonicalize((), "vertex-set") == ""
    assert canonicalize((), "edge-set") == ""


@given(st.lists(st.integers(1, 50), min_size=1))
def test_vertex_set_permutation_invariant(values):
    shuffled = list(reversed(values))
    assert canonicalize(values, "vertex-set") == canonicalize(shuffled, "vertex-set")


@given(st.lists(st.integers(1, 50), min_size=1, max_size=8, unique=True))
def test_path_reversal_invariant(seq):
    assert canonicalize(seq, "path") == canonicalize(list(reversed(seq)), "path")


@given(st.lists(st.tuples(st.integers(1, 9), st.integers(1, 9)).filter(lambda e: e[0] != e[1])))
def test_edge_set_orientation_invariant(edges):
    flipped = [(v, u) for u, v in edges]
    assert canonicalize(edges, "edge-set") == canonicalize(flipped, "edge-set")
