"""Degree-based topological indices."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NoSuchEdge
from .graph import Graph


@dataclass(frozen=True)
class IndexValues:
    sombor: float
    first_zagreb: int
    forgotten: int
    isi: float


def sombor_index(g: Graph) -> float:
    """Sum of sqrt(d_u^2 + d_v^2) over the edges."""
    d = g.degrees
    return math.fsum(math.hypot(d[u], d[v]) for u, v in g.edges())


def first_zagreb(g: Graph) -> int:
    """Z1 = sum of squared degrees, cross-checked against its edge-sum form."""
    d = g.degrees
    total = sum(x * x for x in d)
    by_edges = sum(d[u] + d[v] for u, v in g.edges())
    if total != by_edges:
        raise AssertionError(f"Z1 vertex sum {total} != edge sum {by_edges}")
    return total


def forgotten(g: Graph) -> int:
    """F = sum of cubed degrees, cross-checked against its edge-sum form."""
    d = g.degrees
    total = sum(x ** 3 for x in d)
    by_edges = sum(d[u] ** 2 + d[v] ** 2 for u, v in g.edges())
    if total != by_edges:
        raise AssertionError(f"F vertex sum {total} != edge sum {by_edges}")
    return total


def isi_index(g: Graph) -> float:
    d = g.degrees
    return math.fsum(d[u] * d[v] / (d[u] + d[v]) for u, v in g.edges())


def edge_so_value(g: Graph, u: int, v: int) -> int:
    """SO-value d_u^2 + d_v^2 of edge ``uv`` (the squared Sombor weight)."""
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"({u}, {v}) is not an edge")
    return g.degree(u) ** 2 + g.degree(v) ** 2


def index_values(g: Graph) -> IndexValues:
    return IndexValues(sombor_index(g), first_zagreb(g), forgotten(g), isi_index(g))
