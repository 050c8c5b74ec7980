import pytest

from enumfpt.closest_string import (
    ClosestStringAdapter,
    PrefixNode,
    enumerate_center_strings,
    hamming,
)
from enumfpt.core import run_flashlight
from enumfpt.harness import generate
from enumfpt.instances import StringSet
from enumfpt.oracle import oracle_center_strings

AABB = StringSet(("aa", "bb"), 2, "ab")


def prefix_node(adapter, prefix):
    residuals = tuple(
        adapter.k - hamming(prefix, s[: len(prefix)]) for s in adapter.instance.strings
    )
    return PrefixNode(prefix, residuals)


def test_decide_cases():
    one = ClosestStringAdapter(AABB, 1)
    assert one.decide(prefix_node(one, ""))
    assert one.decide(prefix_node(one, "b"))
    zero = ClosestStringAdapter(AABB, 0)
    assert not zero.decide(prefix_node(zero, ""))


def test_split_cases():
    one = ClosestStringAdapter(AABB, 1)
    assert [c.prefix for c in one.split(prefix_node(one, ""))] == ["a", "b"]
    zero = ClosestStringAdapter(AABB, 0)
    assert zero.split(prefix_node(zero, "")) == []
    forced = ClosestStringAdapter(StringSet(("ab",), 2, "ab"), 0)
    assert [c.prefix for c in forced.split(prefix_node(forced, "a"))] == ["ab"]


def test_measure_is_remaining_length():
    adapter = ClosestStringAdapter(StringSet(("abcde",), 5, "abcde"), 1)
    assert adapter.measure(prefix_node(adapter, "")) == 5
    assert adapter.measure(prefix_node(adapter, "abc")) == 2
    two = ClosestStringAdapter(AABB, 1)
    assert two.measure(prefix_node(two, "ab")) == 0


def test_leaf_enum_outputs_prefix():
    adapter = ClosestStringAdapter(AABB, 1)
    assert list(adapter.leaf_enum(prefix_node(adapter, "ab"))) == ["ab"]


def test_pruned_prefix_never_reaches_leaf():
    """Prefix "aa" dies at the split: its residual for "bb" is exhausted."""
    adapter = ClosestStringAdapter(AABB, 1)
    children = adapter.split(prefix_node(adapter, "a"))
    assert [c.prefix for c in children] == ["ab"]


def test_forced_string():
    assert list(enumerate_center_strings(StringSet(("ab", "ab"), 2, "ab"), 0)) == ["ab"]


def test_no_center_is_empty():
    assert list(enumerate_center_strings(AABB, 0)) == []


def test_two_centers():
    assert sorted(enumerate_center_strings(AABB, 1)) == ["ab", "ba"]


class RecordingAdapter(ClosestStringAdapter):
    def __init__(self, *args):
        super().__init__(*args)
        self.expanded = []

    def split(self, node):
        self.expanded.append(node)
        return super().split(node)


@pytest.mark.parametrize("seed", range(40))
def test_oracle_equivalence_and_flashlight_soundness(seed):
    sigma = 2 + seed % 2
    length = 1 + seed % 6
    inst = generate("closest-string", seed, n=1 + seed % 4, length=length, sigma=sigma)
    k = seed % (length + 1)
    adapter = RecordingAdapter(inst, k)
    root = adapter.root()
    produced = []
    if adapter.decide(root):
        produced = list(run_flashlight(adapter, root))
    assert len(produced) == len(set(produced))
    assert set(produced) == oracle_center_strings(inst, k)
    for node in adapter.expanded:
        assert adapter.decide(node), "expanded a node without solutions"


def test_children_partition_the_prefix_cell():
    """A node's center strings split exactly by the next character."""
    for seed in range(10):
        inst = generate("closest-string", 800 + seed, n=2 + seed % 3, length=4, sigma=2)
        k = 1 + seed % 3
        adapter = ClosestStringAdapter(inst, k)
        centers = oracle_center_strings(inst, k)

        def cell(prefix):
            return {s for s in centers if s.startswith(prefix)}

        frontier = [adapter.root()]
        while frontier:
            node = frontier.pop()
            if adapter.measure(node) == 0:
                continue
            children = adapter.split(node)
            child_cells = [cell(c.prefix) for c in children]
            for i, a in enumerate(child_cells):
                for b in child_cells[i + 1 :]:
                    assert not (a & b)
            union = set().union(*child_cells) if child_cells else set()
            assert union == cell(node.prefix)
            frontier.extend(children)


@pytest.mark.parametrize("seed", range(12))
def test_delay_bound_in_adapter_calls(seed):
    inst = generate("closest-string", 500 + seed, n=3, length=5, sigma=3)
    k = 2 + seed % 3
    adapter = ClosestStringAdapter(inst, k)
    root = adapter.root()
    if not adapter.decide(root):
        return
    bound = 2 * inst.length * len(inst.alphabet)
    stream = run_flashlight(adapter, root)
    last = adapter.decide_calls
    for _ in stream:
        assert adapter.decide_calls - last <= bound
        last = adapter.decide_calls
