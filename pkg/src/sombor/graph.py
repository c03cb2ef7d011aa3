"""Immutable simple graphs, standard families, predicates and transforms."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    BadParams,
    Disconnected,
    DuplicateEdge,
    GraphError,
    LoopEdge,
    NoSuchEdge,
    SiteInvalid,
    VertexOutOfRange,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    max_deg: int
    min_deg: int


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    immutable and hashable; operations that "modify" a graph return a new one.
    Use :func:`from_edge_list` rather than building ``adj`` by hand.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        total = 0
        for v, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbour list of {v} is not sorted and unique")
            for w in nbrs:
                if w == v:
                    raise LoopEdge(f"loop at vertex {v}")
                if not 0 <= w < self.n:
                    raise VertexOutOfRange(f"neighbour {w} of {v} outside 0..{self.n - 1}")
                if v not in self.adj[w]:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
            total += len(nbrs)
        object.__setattr__(self, "m", total // 2)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degree_profile(self) -> DegreeProfile:
        degs = self.degrees
        return DegreeProfile(degs, max(degs, default=0), min(degs, default=0))

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; loops and repeated pairs are rejected."""
    if n < 0:
        raise BadParams(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"vertex {x} outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if v in nbrs[u]:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


# --- standard families -------------------------------------------------------

def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}; vertices ``0..s-1`` form the first side."""
    _need(s >= 1 and t >= 1, f"complete bipartite graph needs s, t >= 1, got {s}, {t}")
    return from_edge_list(s + t, ((u, s + v) for u in range(s) for v in range(t)))


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    _need(n >= 2, f"star needs n >= 2, got {n}")
    return complete_bipartite(1, n - 1)


def empty(n: int) -> Graph:
    _need(n >= 1, f"empty graph needs n >= 1, got {n}")
    return from_edge_list(n, [])


def k2_union(n: int) -> Graph:
    """(n/2)K_2, a perfect matching on ``n`` vertices."""
    _need(n >= 2 and n % 2 == 0, f"k2_union needs an even n >= 2, got {n}")
    return from_edge_list(n, ((2 * i, 2 * i + 1) for i in range(n // 2)))


FAMILIES = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "empty": (empty, 1),
    "k2_union": (k2_union, 1),
}


def family(kind: str, *params: int) -> Graph:
    """Named family member, e.g. ``family("complete_bipartite", 2, 3)``."""
    try:
        build, arity = FAMILIES[kind]
    except KeyError:
        raise BadParams(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}") from None
    if len(params) != arity:
        raise BadParams(f"family {kind!r} takes {arity} parameter(s), got {len(params)}")
    return build(*params)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParams(msg)


# --- predicates --------------------------------------------------------------

def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, s)) if d >= 0]
        for v in comp:
            seen[v] = True
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    """True for connected graphs; the null graph (n = 0) counts as connected."""
    return g.n == 0 or all(d >= 0 for d in bfs_distances(g, 0))


def is_bipartite(g: Graph) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Two-colour by BFS; on success also return the two colour classes."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False, None
    side0 = tuple(v for v in range(g.n) if colour[v] == 0)
    side1 = tuple(v for v in range(g.n) if colour[v] == 1)
    return True, (side0, side1)


def bipartite(g: Graph) -> bool:
    return is_bipartite(g)[0]


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise Disconnected("diameter is undefined for a disconnected graph")
    return max((max(bfs_distances(g, v)) for v in range(g.n)), default=0)


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) <= 1


# --- transforms ----------------------------------------------------------------

def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"({u}, {v}) is not an edge")
    return from_edge_list(g.n, (e for e in g.edges() if set(e) != {u, v}))


@dataclass(frozen=True)
class GraftSite:
    """Edge ``uv`` across which the neighbours of ``v`` are moved to ``u``."""

    u: int
    v: int

    def problems(self, g: Graph) -> list[str]:
        """Preconditions of the transform that ``g`` violates (empty if valid)."""
        u, v = self.u, self.v
        if not g.has_edge(u, v):
            return [f"({u}, {v}) is not an edge"]
        out = []
        if g.degree(u) < 2:
            out.append(f"d_u = {g.degree(u)} < 2")
        if g.degree(v) < 2:
            out.append(f"d_v = {g.degree(v)} < 2")
        common = set(g.adj[u]) & set(g.adj[v])
        if common:
            out.append(f"u and v share neighbours {sorted(common)}")
        return out

    def is_valid(self, g: Graph) -> bool:
        return not self.problems(g)


def graft_transform(g: Graph, site: GraftSite) -> Graph:
    """Rewire every neighbour ``w != u`` of ``v`` to ``u``, leaving ``v`` pendant on ``u``."""
    problems = site.problems(g)
    if problems:
        raise SiteInvalid(f"graft site ({site.u}, {site.v}): " + "; ".join(problems))
    u, v = site.u, site.v
    moved = [w for w in g.adj[v] if w != u]
    edges = [e for e in g.edges() if not (v in e and u not in e)]
    edges += [(u, w) for w in moved]
    return from_edge_list(g.n, edges)

