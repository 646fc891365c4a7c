import numpy as np
import pytest

from mwgraph.bruteforce import (brute_force_partition, enumerate_simple_paths, pair_kernel, path_chain_kernel,
                                path_kernel, path_set)
from mwgraph.errors import BadVertexId, NotAPath, PathBudgetExceeded
from mwgraph.graph import build_graph
from mwgraph.oracle import oracle_partition
from mwgraph.subspace import intersect

from _support import graph_family, same, span, union_find_reference


def test_path_counts(examples):
    assert len(list(enumerate_simple_paths(examples["ex2"], 1, 4))) == 6
    assert list(enumerate_simple_paths(examples["ex3"], 1, 4)) == [(1, 2, 3, 4)]
    assert len(list(enumerate_simple_paths(examples["ex4"], 1, 6))) == 3


def test_paths_shortest_first_then_lexicographic(examples):
    paths = list(enumerate_simple_paths(examples["ex2"], 1, 4))
    assert paths == [(1, 2, 4), (1, 3, 4), (1, 2, 3, 4), (1, 3, 2, 4), (1, 2, 5, 3, 4), (1, 3, 5, 2, 4)]


def test_paths_complete_graph_count():
    g = build_graph(6, 1, [(u, v, [[1.0]]) for u in range(1, 7) for v in range(u + 1, 7)])
    paths = list(enumerate_simple_paths(g, 1, 6))
    assert len(paths) == len(set(paths)) == 1 + 4 + 12 + 24 + 24
    assert all(p[0] == 1 and p[-1] == 6 and len(set(p)) == len(p) for p in paths)
    assert [len(p) for p in paths] == sorted(len(p) for p in paths)


def test_path_kernel_examples(examples):
    g2 = examples["ex2"]
    assert same(path_kernel(g2, (1, 2, 4)), span([0, 1]))
    assert path_kernel(g2, (1, 2, 3, 4)).is_full
    assert path_kernel(build_graph(2, 2, [(1, 2, np.eye(2))]), (1, 2)).is_zero
    with pytest.raises(NotAPath):
        path_kernel(g2, (1, 4))
    with pytest.raises(NotAPath):
        path_kernel(g2, (1, 2, 1))


def test_pair_kernel_examples(examples):
    assert pair_kernel(examples["ex2"], 1, 4).is_zero
    assert same(pair_kernel(examples["ex4"], 1, 6), span([1, 0]))
    g = build_graph(3, 2, [(1, 2, np.eye(2))])
    assert pair_kernel(g, 1, 3).is_full
    with pytest.raises(BadVertexId):
        pair_kernel(g, 1, 1)
    with pytest.raises(BadVertexId):
        pair_kernel(g, 1, 4)


def test_partition_examples(examples):
    r2 = brute_force_partition(examples["ex2"])
    assert not r2.connected and r2.partition.as_lists() == [[1, 4], [2], [3, 5]]
    assert brute_force_partition(examples["ex1"]).connected
    assert not brute_force_partition(examples["ex4"]).partition.same_cluster(1, 6)


def test_budget():
    g = build_graph(7, 2, [(u, v, np.diag([1.0, 0.0])) for u in range(1, 8) for v in range(u + 1, 8)])
    with pytest.raises(PathBudgetExceeded):
        brute_force_partition(g, path_budget=500)
    with pytest.raises(PathBudgetExceeded):
        list(enumerate_simple_paths(g, 1, 2, path_budget=10))
    assert brute_force_partition(g, path_budget=None).partition.as_lists() == [[v] for v in range(1, 8)]


def test_random_graph_properties():
    for _, g in graph_family(80, nmax=6):
        res = brute_force_partition(g)
        assert res.partition == brute_force_partition(g, early_stop=False).partition
        assert res.partition == union_find_reference(g.n, res.passes)
        assert res.partition.refines(oracle_partition(g).partition)
        for i in range(1, g.n + 1):
            for j in range(i + 1, g.n + 1):
                ps = path_set(g, i, j)
                acc = None
                for p in ps.paths:
                    k = path_kernel(g, p)
                    assert same(k, path_chain_kernel(g, p))
                    for m in range(2, len(p)):  # a prefix never has a bigger kernel
                        assert k.contains(path_kernel(g, p[:m]))
                    acc = k if acc is None else acc
                    acc = intersect(acc, k)
                if acc is not None:
                    assert same(acc, ps.accumulated_kernel)
                else:
                    assert ps.accumulated_kernel.is_full
