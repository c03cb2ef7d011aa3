"""Sombor matrix spectra, spectral bounds and extremal search for small graphs."""

from .bounds import REGISTRY, BoundReport, classify_equality_family, evaluate, verify_corpus
from .errors import SomborError
from .formats import parse_graph6, read_graphs, write_graph6
from .graph import Graph, from_edge_list
from .invariants import index_values
from .matchings import coulson_energy, matching_coefficients, sombor_charpoly_bipartite
from .spectra import estrada_index, sombor_energy, sombor_matrix, sombor_spectrum, spectral_radius
from .trees import enumerate_trees

__version__ = "0.1.0"

__all__ = [
    "REGISTRY", "BoundReport", "Graph", "SomborError", "classify_equality_family",
    "coulson_energy", "enumerate_trees", "estrada_index", "evaluate", "from_edge_list",
    "index_values", "matching_coefficients", "parse_graph6", "read_graphs",
    "sombor_charpoly_bipartite", "sombor_energy", "sombor_matrix", "sombor_spectrum",
    "spectral_radius", "verify_corpus", "write_graph6",
]
