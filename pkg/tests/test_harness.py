import time

import pytest

from enumfpt.harness import (
    PROBLEMS,
    enumerate_solutions,
    equivalence_suite,
    generate,
    matching_instance,
    measure,
)
from enumfpt.instances import IlpSystem, StringSet, Tournament, UndirectedGraph


def test_measure_empty_stream():
    report = measure(iter(()))
    assert report.solution_count == 0
    assert report.first_solution_ns is None
    assert report.max_delay_ns == report.post_last_ns  # one interval: total runtime
    assert report.max_delay_ns >= report.mean_delay_ns


def test_measure_single_solution():
    def slowish():
        yield "a"
        time.sleep(0.002)

    report = measure(slowish())
    assert report.solution_count == 1
    assert report.first_solution_ns is not None
    assert report.max_delay_ns == max(report.first_solution_ns, report.post_last_ns)


def test_measure_timestamps_consistent():
    report = measure(iter("abc"), keep_timestamps=True)
    assert report.solution_count == len(report.timestamps) == 3
    assert report.timestamps == sorted(report.timestamps)
    assert report.max_delay_ns >= report.mean_delay_ns


def test_matching_family_solution_count():
    report = measure(enumerate_solutions("vertex-cover", matching_instance(10), 10))
    assert report.solution_count == 1024


def test_generate_is_deterministic():
    for kind in PROBLEMS:
        assert generate(kind, 7) == generate(kind, 7)


def test_generate_shapes():
    assert isinstance(generate("fvst", 1, n=5), Tournament)
    g = generate("steiner", 2, n=6, terminals=3)
    assert isinstance(g, UndirectedGraph) and len(g.terminals) == 3
    assert isinstance(generate("closest-string", 3), StringSet)
    ilp = generate("ilp", 4, nvars=2)
    assert isinstance(ilp, IlpSystem) and len(ilp.box) == 2


@pytest.mark.parametrize("kind", PROBLEMS)
def test_equivalence_suite_small(kind):
    report = equivalence_suite(kind, trials=6, seed=5)
    assert report.passed, report.mismatch


def test_equivalence_suite_reports_duplicates():
    def corrupted(instance, k):
        out = list(enumerate_solutions("vertex-cover", instance, k))
        return out + out[:1]  # repeat the first solution, if any

    report = equivalence_suite("vertex-cover", trials=10, seed=3, enumerator=corrupted)
    assert not report.passed
    assert report.mismatch.duplicates
    assert "graph" in report.mismatch.instance_text


def test_equivalence_suite_reports_missing():
    def lossy(instance, k):
        return list(enumerate_solutions("vertex-cover", instance, k))[1:]

    report = equivalence_suite("vertex-cover", trials=10, seed=3, enumerator=lossy)
    assert not report.passed
    assert report.mismatch.missing
