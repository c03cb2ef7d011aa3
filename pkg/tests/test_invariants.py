from __future__ import annotations

import math

import pytest
from hypothesis import given

from sombor.errors import NoSuchEdge
from sombor.graph import complete, complete_bipartite, cycle, empty, path, star
from sombor.invariants import edge_so_value, first_zagreb, forgotten, index_values, isi_index, sombor_index
from sombor.spectra import sombor_matrix

from test_graph import graphs


@pytest.mark.parametrize("g,so,z1,f,isi", [
    (path(4), 2 * math.sqrt(5) + math.sqrt(8), 10, 18, 2 * (2 / 3) + 1),
    (complete(4), 6 * math.sqrt(18), 36, 108, 6 * 1.5),
    (complete_bipartite(2, 3), 6 * math.sqrt(13), 30, 78, 6 * 1.2),
    (star(5), 4 * math.sqrt(17), 20, 68, 4 * 0.8),
    (empty(3), 0.0, 0, 0, 0.0),
])
def test_hand_values(g, so, z1, f, isi):
    v = index_values(g)
    assert v.sombor == pytest.approx(so, rel=1e-14)
    assert (v.first_zagreb, v.forgotten) == (z1, f)
    assert v.isi == pytest.approx(isi, rel=1e-14)


@given(graphs())
def test_forgotten_is_half_trace_of_square(g):
    S = sombor_matrix(g)
    assert forgotten(g) == pytest.approx(float((S * S).sum()) / 2, rel=1e-12, abs=1e-12)
    assert first_zagreb(g) >= 0 and isi_index(g) <= sombor_index(g)


def test_regular_sombor_index():
    # every edge of an r-regular graph carries sqrt(2) r
    g = cycle(7)
    assert sombor_index(g) == pytest.approx(7 * 2 * math.sqrt(2))


def test_edge_so_value():
    assert edge_so_value(path(4), 1, 2) == 8
    assert edge_so_value(star(4), 1, 0) == 10
    with pytest.raises(NoSuchEdge):
        edge_so_value(path(4), 0, 3)
