from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from hypothesis import given

from sombor.errors import NotBipartite, SizeTooLarge
from sombor.graph import complete, complete_bipartite, cycle, empty, path, star
from sombor.matchings import (
    coulson_energy,
    coulson_integral,
    matching_coefficients,
    sombor_charpoly_bipartite,
)
from sombor.spectra import (
    char_poly,
    charpoly_from_eigenvalues,
    sombor_energy,
    sombor_matrix,
    sombor_spectrum,
)
from sombor.trees import enumerate_trees

from test_graph import graphs


def brute_matchings(g, weighted=True):
    d = g.degrees
    edges = g.edges()
    b = [1]
    for k in range(1, g.n // 2 + 1):
        total = 0
        for combo in itertools.combinations(edges, k):
            ends = [x for e in combo for x in e]
            if len(set(ends)) == 2 * k:
                total += math.prod(d[u] ** 2 + d[v] ** 2 if weighted else 1 for u, v in combo)
        b.append(total)
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    return tuple(b)


@given(graphs(max_n=7))
def test_against_brute_force(g):
    assert matching_coefficients(g).b == brute_matchings(g)
    assert matching_coefficients(g, weighted=False).b == brute_matchings(g, weighted=False)


def test_known_values():
    assert matching_coefficients(path(4)).b == (1, 18, 25)
    assert matching_coefficients(empty(3)).b == (1,)
    assert matching_coefficients(complete(4), weighted=False).b == (1, 6, 3)
    assert matching_coefficients(star(5)).matching_number == 1


def test_size_limit():
    with pytest.raises(SizeTooLarge):
        matching_coefficients(empty(25))


@pytest.mark.parametrize("n", range(2, 11))
def test_charpoly_exact_on_trees(n):
    for t in enumerate_trees(n):
        exact = np.array(sombor_charpoly_bipartite(t).coefficients, dtype=float)
        expanded = np.array(charpoly_from_eigenvalues(sombor_spectrum(t).eigenvalues).coefficients)
        lev = np.array(char_poly(sombor_matrix(t)).coefficients)
        scale = np.abs(exact).max()
        assert np.allclose(expanded, exact, rtol=1e-8, atol=1e-12 * scale)
        # LeVerrier leaves rounding noise in the vanishing odd coefficients
        nz = exact != 0
        assert np.allclose(lev[nz], exact[nz], rtol=1e-8, atol=0)


def test_charpoly_misses_cycle_terms():
    # C_4: each 4-cycle adds 2 * prod(edge weights) = 2 * 8^2 to the constant term
    got = sombor_charpoly_bipartite(cycle(4)).coefficients
    true = char_poly(sombor_matrix(cycle(4))).coefficients
    assert got == (1, 0, -32, 0, 128)
    assert np.allclose(true, [1, 0, -32, 0, 0], atol=1e-9)


def test_charpoly_needs_bipartite():
    with pytest.raises(NotBipartite):
        sombor_charpoly_bipartite(cycle(5))
    with pytest.raises(NotBipartite):
        coulson_energy(complete(3))


def test_coulson_path4():
    assert coulson_energy(path(4)) == pytest.approx(4 * math.sqrt(7), rel=1e-12)


@pytest.mark.parametrize("n", range(2, 11))
def test_coulson_matches_eigen_energy_on_trees(n):
    for t in enumerate_trees(n):
        assert coulson_energy(t) == pytest.approx(sombor_energy(t), rel=1e-9)


def test_coulson_trivial():
    assert coulson_integral((1,)).value == 0.0
    assert coulson_integral((1, 2, 0, 0)).value == pytest.approx(2 * math.sqrt(2))


def test_coulson_loose_tolerance_is_cheaper():
    tight = coulson_integral(matching_coefficients(complete_bipartite(1, 6)).b, 1e-12)
    loose = coulson_integral(matching_coefficients(complete_bipartite(1, 6)).b, 1e-2)
    assert loose.evaluations <= tight.evaluations
    assert loose.value == pytest.approx(tight.value, rel=1e-2)
