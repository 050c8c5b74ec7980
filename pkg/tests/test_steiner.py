import pytest

from enumfpt.harness import generate
from enumfpt.instances import UndirectedGraph, parse_instance
from enumfpt.oracle import TooLarge, oracle_steiner_trees
from enumfpt.steiner import (
    DisconnectedTerminals,
    DistOracle,
    enumerate_steiner_trees,
    fill_table,
    optimum_weight,
    preprocess,
)

PATH_AB = parse_instance("wgraph 3 2\n1 2 1\n2 3 1\nterminals 2\n1 3\n")


def test_preprocess_reuses_normal_form_terminals():
    inst = preprocess(PATH_AB, (1, 3))
    assert inst.terminals == (1, 3)
    assert inst.pendant_edges == frozenset()
    assert inst.graph.n == 3


def test_preprocess_attaches_pendants_everywhere():
    g = parse_instance("wgraph 3 3\n1 2 1\n1 3 1\n2 3 1\nterminals 3\n1 2 3\n")
    inst = preprocess(g, (1, 2, 3))
    assert inst.terminals == (4, 5, 6)
    assert len(inst.pendant_edges) == 3
    assert all(inst.graph.weights[e] == 1 for e in inst.pendant_edges)


def test_preprocess_rejects_disconnected_terminals():
    g = parse_instance("wgraph 4 1\n1 2 1\nterminals 2\n1 4\n")
    with pytest.raises(DisconnectedTerminals):
        preprocess(g, (1, 4))
    assert list(enumerate_steiner_trees(g)) == []


def test_table_on_path():
    inst = preprocess(PATH_AB, (1, 3))
    tables = fill_table(inst)
    assert tables.t1[(frozenset({1}), 2)] == 1
    assert tables.t1[(frozenset({3}), 2)] == 1
    assert tables.t0[(frozenset({1, 3}), 2)] == 2
    # the only non-terminal is the merge point itself: no leaf entry at |D|=2
    assert (frozenset({1, 3}), 2) not in tables.t1
    # leaves never merge: no degree->=2 entry for singleton terminal sets
    assert not any(len(d) == 1 for d, _ in tables.t0)
    assert optimum_weight(inst, tables) == 2


def test_min_paths_diamond():
    g = parse_instance("wgraph 4 4\n1 2 1\n1 3 1\n2 4 1\n3 4 1\n")
    oracle = DistOracle(g)
    paths = sorted(tuple(sorted(p)) for p in oracle.min_path_edges(1, 4))
    assert paths == [(((1, 2)), (2, 4)), ((1, 3), (3, 4))]


def test_min_paths_self_is_empty():
    g = parse_instance("wgraph 2 1\n1 2 1\n")
    assert list(DistOracle(g).min_path_edges(1, 1)) == [frozenset()]


def test_min_paths_unique_optimum():
    g = parse_instance("wgraph 3 2\n1 2 1\n1 3 3\n")
    # direct edge 1-2 beats any detour
    assert list(DistOracle(g).min_path_edges(1, 2)) == [frozenset({(1, 2)})]


def test_single_path_tree():
    assert list(enumerate_steiner_trees(PATH_AB)) == ["1 2,2 3"]


def test_two_route_example():
    # a=1, u=2, v=3, b=4, w=5; the u-v stretch costs 2 directly or via w
    g = parse_instance(
        "wgraph 5 5\n1 2 1\n2 3 2\n3 4 1\n2 5 1\n3 5 1\nterminals 2\n1 4\n"
    )
    got = sorted(enumerate_steiner_trees(g, verify=True))
    assert got == ["1 2,2 3,3 4", "1 2,2 5,3 4,3 5"]


def test_single_terminal_trivial_tree():
    g = parse_instance("wgraph 3 2\n1 2 1\n2 3 1\nterminals 1\n2\n")
    assert list(enumerate_steiner_trees(g)) == [""]


def test_unreachable_part_untouched():
    g = parse_instance("wgraph 5 3\n1 2 1\n2 3 1\n4 5 9\nterminals 2\n1 3\n")
    got = list(enumerate_steiner_trees(g))
    assert got == ["1 2,2 3"]


@pytest.mark.parametrize("seed", range(30))
def test_oracle_equivalence(seed):
    g = generate(
        "steiner", seed, n=4 + seed % 5, p=0.4 + (seed % 3) * 0.05, terminals=2 + seed % 3
    )
    try:
        expected = oracle_steiner_trees(g)
    except TooLarge:
        return
    produced = list(enumerate_steiner_trees(g, verify=True))
    assert len(produced) == len(set(produced)), "duplicate provenance"
    assert set(produced) == expected


def test_every_output_matches_table_optimum():
    for seed in range(10):
        g = generate("steiner", 1234 + seed, n=7, p=0.5, terminals=3)
        try:
            inst = preprocess(g, g.terminals)
        except DisconnectedTerminals:
            continue
        tables = fill_table(inst)
        best = optimum_weight(inst, tables)
        pendant_cost = len(inst.pendant_edges)
        for sol in enumerate_steiner_trees(g):
            if not sol:
                continue
            weight = sum(
                g.weights[tuple(int(x) for x in pair.split())] for pair in sol.split(",")
            )
            assert weight == best - pendant_cost
