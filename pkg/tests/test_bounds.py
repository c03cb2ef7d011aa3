from __future__ import annotations

import csv
import io
import json
import math

import pytest

from sombor import bounds as B
from sombor.errors import NotApplicable, NotBipartite, UnknownBound, UnknownFamily
from sombor.formats import parse_graph6
from sombor.graph import (
    GraftSite,
    complete,
    complete_bipartite,
    cycle,
    empty,
    from_edge_list,
    is_regular,
    k2_union,
    path,
    star,
)
from sombor.spectra import spectral_radius
from sombor.trees import enumerate_trees


def family_corpus():
    out = []
    for n in range(1, 13):
        out += [complete(n), path(n)]
        if n >= 3:
            out.append(cycle(n))
        out += [complete_bipartite(s, n - s) for s in range(1, n // 2 + 1)]
    return out


def test_registry_ids_unique():
    ids = [b.id for b in B.REGISTRY]
    assert len(ids) == len(set(ids)) == 27
    for b in B.REGISTRY:
        assert b.target in ("spectral_radius", "energy", "estrada")
        assert b.side in ("lower", "upper")
        assert b.equality_family == B.NONE_STATED or b.equality_family in B.FAMILIES


@pytest.mark.parametrize("bid,g,expected", [
    ("T5.4-U", complete_bipartite(2, 3), True),
    ("C3.3-U", cycle(5), False),
    ("T5.2-L", empty(4), False),
    ("T4.2-L", path(2), False),
    ("T4.7-L", star(3), True),
    ("C4.1-U", path(4), False),
    ("T5.3-L", empty(3), False),
    ("T5.3-L", k2_union(2), True),
])
def test_applicable(bid, g, expected):
    assert B.applicable(bid, g) is expected


def test_unknown_ids():
    with pytest.raises(UnknownBound):
        B.applicable("T9.9-U", path(3))
    with pytest.raises(UnknownFamily):
        B.classify_equality_family(path(3), "nonsense")


def test_not_applicable():
    with pytest.raises(NotApplicable):
        B.evaluate("C3.3-U", cycle(5))


@pytest.mark.parametrize("bid,g,target,bound", [
    ("T3.2-U", complete(4), 9 * math.sqrt(2), math.sqrt(162)),
    ("T4.2-L", complete_bipartite(2, 3), 2 * math.sqrt(78), 2 * math.sqrt(78)),
    ("T4.6-L", cycle(4), 8 * math.sqrt(2), 2 * math.sqrt(2) * 4),
    ("C3.3-U", star(5), math.sqrt(4 * 17), math.sqrt(4 * 17)),
])
def test_equality_examples(bid, g, target, bound):
    r = B.evaluate(bid, g)
    assert r.target_value == pytest.approx(target, rel=1e-12)
    assert r.bound_value == pytest.approx(bound, rel=1e-12)
    assert r.holds and r.equality and r.equality_family_matches is True


def test_slack_sign():
    r = B.evaluate("T3.2-U", path(5))
    assert r.slack == pytest.approx(r.bound_value - r.target_value)
    r = B.evaluate("T3.2-L", path(5))
    assert r.slack == pytest.approx(r.target_value - r.bound_value)
    assert r.slack > 0 and not r.equality


@pytest.mark.parametrize("g,fam,expected", [
    (cycle(6), "regular", True),
    (star(5), "star", True),
    (path(4), "complete_bipartite", False),
    (complete_bipartite(3, 4), "balanced_complete_bipartite", True),
    (complete_bipartite(2, 4), "balanced_complete_bipartite", False),
    (path(4), "semiregular_bipartite", False),
    (complete_bipartite(2, 4), "semiregular_bipartite", True),
    (k2_union(6), "empty_or_K2union", True),
    (empty(3), "empty_or_K2union", True),
    (empty(3), "empty", True),
    (complete(5), "complete", True),
    (from_edge_list(4, [(0, 1), (1, 2)]), "complete_bipartite", False),
    (path(2), "star", True),
])
def test_classify(g, fam, expected):
    assert B.classify_equality_family(g, fam) is expected


def test_empty_bound_set():
    v = B.verify_corpus([path(4), cycle(5)], [])
    assert v.reports == [] and v.summary.evaluations == 0


def test_atlas_zero_violations(atlas):
    v = B.verify_corpus(atlas)
    assert v.summary.errors == []
    assert v.summary.violations == 0
    assert v.summary.family_mismatches == 0


def test_trees_and_families_zero_violations():
    corpus = [t for n in range(3, 12) for t in enumerate_trees(n)] + family_corpus()
    v = B.verify_corpus(corpus)
    assert v.summary.errors == []
    assert v.summary.violations == 0 and v.summary.family_mismatches == 0


def test_regular_equality_rows(connected_atlas):
    v = B.verify_corpus(connected_atlas, ["T3.1-L", "T3.1-U"])
    for r in v.reports:
        assert r.equality == is_regular(parse_graph6(r.graph6))


def test_strict_rows_never_tight():
    v = B.verify_corpus([t for n in range(3, 11) for t in enumerate_trees(n)], ["T4.7-L", "T4.7-U"])
    assert v.summary.equalities == 0 and v.ok


def test_report_order_and_parallel_agree(connected_atlas):
    sample = connected_atlas[::7]
    serial = B.verify_corpus(reversed(sample))
    parallel = B.verify_corpus(sample, workers=2)
    assert serial.reports == parallel.reports
    keys = [(r.graph6, r.bound) for r in serial.reports]
    assert keys == sorted(keys)


def test_output_formats():
    v = B.verify_corpus([complete_bipartite(2, 3)], ["T5.4-U", "T4.2-L"])
    lines = B.report_jsonl(v.reports).splitlines()
    fields = set(json.loads(lines[0]))
    assert fields == {"graph6", "bound", "target_value", "bound_value", "slack", "holds",
                      "equality", "equality_family_matches"}
    rows = list(csv.DictReader(io.StringIO(v.summary.to_csv())))
    assert [r["bound"] for r in rows] == ["T4.2-L", "T5.4-U"]
    assert all(r["equalities"] == "1" for r in rows)


def test_graft_path_to_star():
    checks = B.check_graft_monotonicity(path(4))
    assert [c.site for c in checks] == [GraftSite(1, 2), GraftSite(2, 1)]
    for c in checks:
        assert c.rho_after == pytest.approx(math.sqrt(30), rel=1e-12)
        assert c.increased


def test_graft_star_and_cycle():
    assert B.check_graft_monotonicity(star(6)) == []
    checks = B.check_graft_monotonicity(cycle(4))
    assert checks and all(c.increased for c in checks)
    assert checks[0].rho_before == pytest.approx(spectral_radius(cycle(4)))


def test_edge_deletion_examples():
    (k2,) = B.check_edge_deletion_energy(path(2))
    assert k2.energy_before == pytest.approx(2 * math.sqrt(2)) and k2.energy_after == 0.0
    mid = [c for c in B.check_edge_deletion_energy(path(4)) if c.edge == (1, 2)][0]
    assert mid.energy_before == pytest.approx(4 * math.sqrt(7))
    assert mid.energy_after == pytest.approx(4 * math.sqrt(2))
    assert all(c.decreased for c in B.check_edge_deletion_energy(path(6)))
    with pytest.raises(NotBipartite):
        B.check_edge_deletion_energy(cycle(5))


def test_edge_deletion_can_raise_energy():
    # deleting an edge of K_{2,4} makes the Sombor energy go up
    checks = B.check_edge_deletion_energy(complete_bipartite(2, 4))
    assert checks[0].energy_before == pytest.approx(25.298221281347036, rel=1e-12)
    assert all(c.energy_after == pytest.approx(25.88417066535723, rel=1e-12) for c in checks)
    assert not any(c.decreased for c in checks)
