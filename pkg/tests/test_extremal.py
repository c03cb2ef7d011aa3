from __future__ import annotations

import math

import pytest

from sombor.errors import BadParams, EmptyCorpus, SizeUnsupported
from sombor.extremal import sweep, tree_sweep
from sombor.formats import parse_graph6, write_graph6
from sombor.graph import complete, path, star
from sombor.trees import enumerate_trees


@pytest.mark.parametrize("objective,max_degree", [("max", 8), ("min", 2)])
def test_trees_nine(objective, max_degree):
    res = sweep(enumerate_trees(9), "spectral_radius", objective)
    (code, value), = res.witnesses
    assert parse_graph6(code).max_degree == max_degree and value == res.optimum
    assert res.evaluated == 47


def test_single_graph_corpus():
    for inv in ("spectral_radius", "energy", "estrada", "sombor_index"):
        res = sweep([complete(4)], inv, "min")
        assert [w[0] for w in res.witnesses] == ["C~"]


def test_order_independent():
    trees = list(enumerate_trees(8))
    a = sweep(trees, "energy", "min")
    b = sweep(reversed(trees), "energy", "min")
    assert a == b


def test_ties_collected():
    # two copies of the same graph tie exactly
    res = sweep([path(5), path(5), star(5)], "energy", "min")
    assert len(res.witnesses) == 2


def test_errors():
    with pytest.raises(EmptyCorpus):
        sweep([], "energy", "min")
    with pytest.raises(BadParams):
        sweep([path(3)], "energy", "median")
    with pytest.raises(BadParams):
        sweep([path(3)], "girth", "min")
    with pytest.raises(SizeUnsupported):
        tree_sweep([2], "energy", "min")


def test_overflow_is_skipped():
    res = sweep([complete(30), path(4)], "estrada", "max")
    assert res.skipped == (write_graph6(complete(30)),)
    assert res.witnesses[0][0] == "Ch"


def test_n3_single_tree():
    (lo,), (hi,) = tree_sweep([3], "energy", "min"), tree_sweep([3], "energy", "max")
    assert lo.witnesses == hi.witnesses


@pytest.mark.parametrize("n", range(4, 12))
def test_max_energy_at_least_star(n):
    (res,) = tree_sweep([n], "energy", "max")
    assert res.optimum >= 2 * math.sqrt((n - 1) * (n * n - 2 * n + 2)) - 1e-9
