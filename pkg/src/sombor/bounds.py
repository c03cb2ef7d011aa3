"""Registry of Sombor spectral-radius, energy and Estrada-index bounds, and
the machinery to verify them on graph corpora.

Every bound is a :class:`BoundSpec`: an applicability predicate, an evaluator,
and the structural family on which the bound is claimed to be tight. Bound
ids (``"T3.1-U"`` etc.) are stable identifiers used on the command line.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import NotApplicable, NotBipartite, SomborError, UnknownBound, UnknownFamily
from .formats import write_graph6
from .graph import (
    Graph,
    GraftSite,
    bipartite,
    delete_edge,
    graft_transform,
    is_bipartite,
    is_connected,
    is_regular,
    is_tree,
)
from .invariants import IndexValues, index_values
from .spectra import (
    Spectrum,
    abs_det_power,
    adjacency_spectrum,
    eigenvalues,
    isi_matrix,
    perron_vector,
    reference_adjacency_energy,
    sombor_energy,
    sombor_spectrum,
    spectral_radius,
    trace_power_combinatorial,
)

SQRT2 = math.sqrt(2.0)
EQUALITY_RTOL = 1e-7


class GraphData:
    """Lazily computed quantities of one graph, shared by all bound evaluators."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n
        self.m = graph.m

    @cached_property
    def graph6(self) -> str:
        return write_graph6(self.graph)

    @cached_property
    def spectrum(self) -> Spectrum:
        return sombor_spectrum(self.graph)

    @cached_property
    def indices(self) -> IndexValues:
        return index_values(self.graph)

    @property
    def F(self) -> int:
        return self.indices.forgotten

    @property
    def rho1(self) -> float:
        return self.spectrum.radius

    @property
    def energy(self) -> float:
        return self.spectrum.energy

    @cached_property
    def estrada(self) -> float:
        return self.spectrum.estrada

    @cached_property
    def lambda1(self) -> float:
        return adjacency_spectrum(self.graph).radius

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        return is_bipartite(self.graph)[1]

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None

    @cached_property
    def tree(self) -> bool:
        return is_tree(self.graph)

    @cached_property
    def complete_bipartite_sides(self) -> tuple[int, int] | None:
        """(s, t) with s >= t >= 1 if the graph is K_{s,t}, else None."""
        parts = self.bipartition
        if parts is None:
            return None
        s, t = sorted((len(parts[0]), len(parts[1])), reverse=True)
        return (s, t) if t >= 1 and self.m == s * t else None

    def trace(self, k: int) -> float:
        return trace_power_combinatorial(self.graph, k)

    @cached_property
    def isi_energy(self) -> float:
        return eigenvalues(isi_matrix(self.graph)).energy

    def target(self, name: str) -> float:
        return {"spectral_radius": lambda: self.rho1, "energy": lambda: self.energy,
                "estrada": lambda: self.estrada}[name]()


# --- equality families -----------------------------------------------------------

def _complete(gd: GraphData) -> bool:
    return gd.m == gd.n * (gd.n - 1) // 2


def _balanced(gd: GraphData) -> bool:
    sides = gd.complete_bipartite_sides
    return sides is not None and sides[0] - sides[1] <= 1


def _semiregular_bipartite(gd: GraphData) -> bool:
    if gd.bipartition is None:
        return False
    d = gd.graph.degrees
    return all(len({d[v] for v in side}) <= 1 for side in gd.bipartition)


FAMILIES: dict[str, Callable[[GraphData], bool]] = {
    "regular": lambda gd: is_regular(gd.graph),
    "semiregular_bipartite": _semiregular_bipartite,
    "complete": _complete,
    "complete_bipartite": lambda gd: gd.complete_bipartite_sides is not None,
    "balanced_complete_bipartite": _balanced,
    "star": lambda gd: gd.tree and gd.graph.max_degree == gd.n - 1,
    "empty_or_K2union": lambda gd: gd.m == 0 or set(gd.graph.degrees) == {1},
    "empty": lambda gd: gd.m == 0,
    "never": lambda gd: False,
}
NONE_STATED = "none_stated"


def classify_equality_family(g: Graph | GraphData, family_id: str) -> bool:
    """Structural membership test for one of :data:`FAMILIES`."""
    try:
        pred = FAMILIES[family_id]
    except KeyError:
        raise UnknownFamily(f"unknown family {family_id!r}") from None
    return pred(g if isinstance(g, GraphData) else GraphData(g))


# --- registry ----------------------------------------------------------------------

def _always(gd: GraphData) -> bool:
    return True


@dataclass(frozen=True)
class BoundSpec:
    """One inequality ``bound <= target`` (lower) or ``target <= bound`` (upper).

    ``equality_scope`` restricts the graphs on which tightness is claimed to
    coincide with ``equality_family``; ``strict`` bounds must never be tight.
    """

    id: str
    target: str
    side: str
    statement: str
    applicability: Callable[[GraphData], bool]
    evaluate: Callable[[GraphData], float]
    equality_family: str = NONE_STATED
    equality_scope: Callable[[GraphData], bool] = _always
    strict: bool = False


def _connected(gd: GraphData) -> bool:
    return gd.connected


def _bipartite(gd: GraphData) -> bool:
    return gd.bipartite


def _complete_bipartite(gd: GraphData) -> bool:
    return gd.complete_bipartite_sides is not None


def _star_rho(n: int) -> float:
    return math.sqrt((n - 1) * (n * n - 2 * n + 2))


def _balanced_f(n: int) -> int:
    s, t = (n + 1) // 2, n // 2
    return s ** 3 * t + s * t ** 3


def _kober_lower(gd: GraphData) -> float:
    n = gd.n
    return math.sqrt(2 * gd.F + n * (n - 1) * abs_det_power(gd.spectrum, 2.0 / n))


def _kober_upper(gd: GraphData) -> float:
    n = gd.n
    return math.sqrt(2 * (n - 1) * gd.F + n * abs_det_power(gd.spectrum, 2.0 / n))


def _energy_rho_upper(gd: GraphData) -> float:
    rest = max(2 * gd.F - gd.rho1 ** 2, 0.0)
    return gd.rho1 + math.sqrt((gd.n - 1) * rest)


def _holder_lower(gd: GraphData) -> float:
    return math.sqrt(gd.trace(2) ** 3 / gd.trace(4))


def _tree_energy_upper(gd: GraphData) -> float:
    return SQRT2 * gd.graph.max_degree * reference_adjacency_energy("path", gd.n)


def _estrada_series_upper(gd: GraphData) -> float:
    F = gd.F
    r = math.sqrt(2 * F)
    return (gd.n - 1 + gd.trace(3) / 6 + gd.trace(4) / 24 + math.exp(r) - r
            - F * r / 3 - F * F / 6)


def _check_empty_range(excess: float, gd: GraphData, what: str) -> None:
    if excess > 1e-7 * max(1.0, gd.energy):
        raise SomborError(f"{what}: empty eigenvalue range but residual {excess:.3g}")


def _estrada_inertia_lower(gd: GraphData) -> float:
    spec, E, rho = gd.spectrum, gd.energy, gd.rho1
    p, q = spec.p, spec.q
    head = E / 2 - rho
    if p == 1:
        _check_empty_range(head, gd, "p = 1")
        middle = 0.0
    else:
        middle = (p - 1) * math.exp(head / (p - 1))
    return math.exp(rho) + spec.n0 + middle + q * math.exp(-E / (2 * q))


def _estrada_bipartite_lower(gd: GraphData) -> float:
    spec, E, rho = gd.spectrum, gd.energy, gd.rho1
    r = spec.rank
    if r == 2:
        _check_empty_range(E - 2 * rho, gd, "r = 2")
        tail = 0.0
    else:
        tail = (r - 2) * math.cosh((E - 2 * rho) / (r - 2))
    return spec.n0 + 2 * math.cosh(rho) + tail


def _B(id, target, side, statement, applicability, evaluate, family=NONE_STATED,
       scope=_always, strict=False) -> BoundSpec:
    return BoundSpec(id, target, side, statement, applicability, evaluate, family, scope, strict)


_RHO, _EN, _EE = "spectral_radius", "energy", "estrada"

REGISTRY: tuple[BoundSpec, ...] = (
    _B("T3.1-L", _RHO, "lower", "sqrt2*delta*lambda1 <= rho1", _always,
       lambda gd: SQRT2 * gd.graph.min_degree * gd.lambda1, "regular"),
    _B("T3.1-U", _RHO, "upper", "rho1 <= sqrt2*Delta*lambda1", _always,
       lambda gd: SQRT2 * gd.graph.max_degree * gd.lambda1, "regular", _connected),
    _B("C3.1-L", _RHO, "lower", "delta*sqrt(2*Z1/n) <= rho1", _connected,
       lambda gd: gd.graph.min_degree * math.sqrt(2 * gd.indices.first_zagreb / gd.n), "regular"),
    _B("C3.1-U", _RHO, "upper", "rho1 <= sqrt2*Delta^2", _connected,
       lambda gd: SQRT2 * gd.graph.max_degree ** 2, "regular"),
    _B("C3.2-L", _RHO, "lower", "2*sqrt2*m*delta/n <= rho1", _connected,
       lambda gd: 2 * SQRT2 * gd.m * gd.graph.min_degree / gd.n, "regular"),
    _B("C3.2-U", _RHO, "upper", "rho1 <= Delta*sqrt(4m-2n+2)", _connected,
       lambda gd: gd.graph.max_degree * math.sqrt(4 * gd.m - 2 * gd.n + 2), "complete"),
    _B("T3.2-L", _RHO, "lower", "sqrt(2F/n) <= rho1", _always,
       lambda gd: math.sqrt(2 * gd.F / gd.n), "empty_or_K2union"),
    _B("T3.2-U", _RHO, "upper", "rho1 <= sqrt(2(n-1)F/n)", _always,
       lambda gd: math.sqrt(2 * (gd.n - 1) * gd.F / gd.n), "complete", _connected),
    _B("C3.3-U", _RHO, "upper", "rho1(T) <= sqrt((n-1)(n^2-2n+2))", lambda gd: gd.tree,
       lambda gd: _star_rho(gd.n), "star"),
    _B("T4.1-L", _EN, "lower", "sqrt(2F + n(n-1)|det S|^(2/n)) <= E", _always, _kober_lower),
    _B("T4.1-U", _EN, "upper", "E <= sqrt(2(n-1)F + n|det S|^(2/n))", _always, _kober_upper),
    _B("T4.2-L", _EN, "lower", "2*sqrt(F) <= E", lambda gd: gd.n >= 3,
       lambda gd: 2 * math.sqrt(gd.F), "complete_bipartite", _connected),
    _B("T4.2-U", _EN, "upper", "E <= sqrt(2nF)", lambda gd: gd.n >= 3,
       lambda gd: math.sqrt(2 * gd.n * gd.F), "empty_or_K2union"),
    _B("C4.1-L", _EN, "lower", "2*sqrt((n-1)(n^2-2n+2)) <= E(K_{s,t})", _complete_bipartite,
       lambda gd: 2 * _star_rho(gd.n), "star"),
    _B("C4.1-U", _EN, "upper", "E(K_{s,t}) <= 2*sqrt(s^3 t + s t^3), s,t = ceil/floor(n/2)",
       _complete_bipartite, lambda gd: 2 * math.sqrt(_balanced_f(gd.n)),
       "balanced_complete_bipartite"),
    _B("T4.3-L", _EN, "lower", "2*rho1 <= E", _always, lambda gd: 2 * gd.rho1),
    _B("T4.3-U", _EN, "upper", "E <= rho1 + sqrt((n-1)(2F-rho1^2))", _always, _energy_rho_upper),
    _B("T4.4-L", _EN, "lower", "sqrt(tr(S^2)^3/tr(S^4)) <= E", lambda gd: gd.m >= 1,
       _holder_lower),
    _B("T4.6-L", _EN, "lower", "2*sqrt2*E_ISI <= E", _bipartite,
       lambda gd: 2 * SQRT2 * gd.isi_energy, "regular", _connected),
    _B("T4.7-L", _EN, "lower", "2*sqrt(2n-2) < E(T)", lambda gd: gd.tree and gd.n >= 3,
       lambda gd: 2 * math.sqrt(2 * gd.n - 2), "never", strict=True),
    _B("T4.7-U", _EN, "upper", "E(T) < sqrt2*Delta*E_A(P_n)", lambda gd: gd.tree and gd.n >= 3,
       _tree_energy_upper, "never", strict=True),
    _B("T5.1-U", _EE, "upper", "EE <= n-1 + tr3/6 + tr4/24 + e^r - r - F r/3 - F^2/6, r=sqrt(2F)",
       _always, _estrada_series_upper, "empty"),
    _B("T5.2-L", _EE, "lower", "e^rho1 + n0 + (p-1)e^((E/2-rho1)/(p-1)) + q e^(-E/2q) <= EE",
       lambda gd: gd.spectrum.p >= 1 and gd.spectrum.q >= 1, _estrada_inertia_lower),
    _B("T5.3-L", _EE, "lower", "n0 + 2cosh(rho1) + (r-2)cosh((E-2rho1)/(r-2)) <= EE",
       lambda gd: gd.bipartite and gd.spectrum.rank >= 2, _estrada_bipartite_lower),
    _B("T5.4-U", _EE, "upper", "EE <= n-2 + 2cosh(sqrt(F))",
       lambda gd: gd.connected and gd.bipartite and gd.n >= 4,
       lambda gd: gd.n - 2 + 2 * math.cosh(math.sqrt(gd.F)), "complete_bipartite"),
    _B("C5.1-L", _EE, "lower", "n-2 + 2cosh(sqrt((n-1)(n^2-2n+2))) <= EE(K_{s,t})",
       lambda gd: _complete_bipartite(gd) and gd.n >= 4,
       lambda gd: gd.n - 2 + 2 * math.cosh(_star_rho(gd.n)), "star"),
    _B("C5.1-U", _EE, "upper", "EE(K_{s,t}) <= n-2 + 2cosh(sqrt(s^3 t + s t^3))",
       lambda gd: _complete_bipartite(gd) and gd.n >= 4,
       lambda gd: gd.n - 2 + 2 * math.cosh(math.sqrt(_balanced_f(gd.n))),
       "balanced_complete_bipartite"),
)
BOUNDS: dict[str, BoundSpec] = {b.id: b for b in REGISTRY}


def get_bound(bound_id: str) -> BoundSpec:
    try:
        return BOUNDS[bound_id]
    except KeyError:
        raise UnknownBound(f"unknown bound {bound_id!r}") from None


def _data(g: Graph | GraphData) -> GraphData:
    return g if isinstance(g, GraphData) else GraphData(g)


def applicable(bound_id: str, g: Graph | GraphData) -> bool:
    gd = _data(g)
    return gd.n >= 1 and get_bound(bound_id).applicability(gd)


# --- evaluation -----------------------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    """Outcome of one (graph, bound) check.

    ``slack`` is positive when the inequality holds with room to spare.
    ``equality_family_matches`` is None where no tightness characterisation
    is claimed for this graph.
    """

    graph6: str
    bound: str
    target_value: float
    bound_value: float
    slack: float
    holds: bool
    equality: bool
    equality_family_matches: bool | None

    def to_dict(self) -> dict:
        return asdict(self)


def evaluate(bound_id: str, g: Graph | GraphData, rtol: float = EQUALITY_RTOL) -> BoundReport:
    """Check one bound; equality means |slack| <= rtol * max(1, target).

    A strict bound that is met with equality does not hold.
    """
    spec = get_bound(bound_id)
    gd = _data(g)
    if not applicable(bound_id, gd):
        raise NotApplicable(f"{bound_id} does not apply to {gd.graph6}")
    value = gd.target(spec.target)
    bound = spec.evaluate(gd)
    if not math.isfinite(bound):
        raise SomborError(f"{bound_id} evaluated to {bound} on {gd.graph6}")
    slack = bound - value if spec.side == "upper" else value - bound
    tol = rtol * max(1.0, abs(value))
    equality = abs(slack) <= tol
    holds = slack >= -tol and not (spec.strict and equality)
    matches = None
    if spec.equality_family != NONE_STATED and spec.equality_scope(gd):
        matches = equality == FAMILIES[spec.equality_family](gd)
    return BoundReport(gd.graph6, bound_id, value, bound, slack, holds, equality, matches)


@dataclass
class BoundTally:
    evaluated: int = 0
    violations: int = 0
    equalities: int = 0
    family_mismatches: int = 0


@dataclass
class Summary:
    graphs: int = 0
    evaluations: int = 0
    violations: int = 0
    equalities: int = 0
    family_mismatches: int = 0
    errors: list[tuple[str, str, str]] = field(default_factory=list)
    per_bound: dict[str, BoundTally] = field(default_factory=dict)

    def add(self, r: BoundReport) -> None:
        tally = self.per_bound.setdefault(r.bound, BoundTally())
        self.evaluations += 1
        tally.evaluated += 1
        if not r.holds:
            self.violations += 1
            tally.violations += 1
        if r.equality:
            self.equalities += 1
            tally.equalities += 1
        if r.equality_family_matches is False:
            self.family_mismatches += 1
            tally.family_mismatches += 1

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["bound", "evaluated", "violations", "equalities", "family_mismatches"])
        for bid in sorted(self.per_bound):
            t = self.per_bound[bid]
            w.writerow([bid, t.evaluated, t.violations, t.equalities, t.family_mismatches])
        return buf.getvalue()

    def describe(self) -> str:
        return (f"graphs={self.graphs} evaluations={self.evaluations} "
                f"violations={self.violations} equalities={self.equalities} "
                f"family_mismatches={self.family_mismatches} errors={len(self.errors)}")


@dataclass
class Verification:
    reports: list[BoundReport]
    summary: Summary

    @property
    def ok(self) -> bool:
        return self.summary.violations == 0 and not self.summary.errors


def _verify_graph(args: tuple[Graph, Sequence[str], float]):
    g, ids, rtol = args
    gd = GraphData(g)
    reports, errors = [], []
    for bid in ids:
        try:
            if applicable(bid, gd):
                reports.append(evaluate(bid, gd, rtol))
        except SomborError as exc:
            errors.append((gd.graph6, bid, str(exc)))
    return reports, errors


def verify_corpus(corpus: Iterable[Graph], bound_ids: Iterable[str] | None = None,
                  rtol: float = EQUALITY_RTOL, workers: int = 1) -> Verification:
    """Evaluate every applicable (graph, bound) pair.

    Per-graph numerical errors are collected in the summary rather than
    aborting the sweep. Reports are sorted by (graph6, bound id).
    """
    ids = [b.id for b in REGISTRY] if bound_ids is None else list(bound_ids)
    for bid in ids:
        get_bound(bid)
    graphs = list(corpus)
    summary = Summary(graphs=len(graphs))
    if not ids:
        return Verification([], summary)
    jobs = [(g, ids, rtol) for g in graphs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_graph, jobs, chunksize=16))
    else:
        results = [_verify_graph(j) for j in jobs]
    reports = []
    for reps, errs in results:
        reports.extend(reps)
        summary.errors.extend(errs)
    reports.sort(key=lambda r: (r.graph6, r.bound))
    for r in reports:
        summary.add(r)
    return Verification(reports, summary)


def report_jsonl(reports: Iterable[BoundReport]) -> str:
    return "".join(json.dumps(r.to_dict()) + "\n" for r in reports)


# --- transformation checks ----------------------------------------------------------

@dataclass(frozen=True)
class GraftCheck:
    site: GraftSite
    rho_before: float
    rho_after: float

    @property
    def increased(self) -> bool:
        return self.rho_after - self.rho_before > 1e-9


def check_graft_monotonicity(g: Graph, tie_tol: float = 1e-9) -> list[GraftCheck]:
    """Apply the graft at every edge meeting its hypotheses and record rho1.

    The endpoint with the larger Perron component plays ``u``; when the two
    components agree within ``tie_tol`` both orientations are checked.
    """
    if g.n < 2 or not is_connected(g):
        return []
    x = perron_vector(g).components
    before = spectral_radius(g)
    out = []
    for a, b in g.edges():
        if x[a] > x[b] + tie_tol:
            orientations = [(a, b)]
        elif x[b] > x[a] + tie_tol:
            orientations = [(b, a)]
        else:
            orientations = [(a, b), (b, a)]
        for u, v in orientations:
            site = GraftSite(u, v)
            if site.is_valid(g):
                out.append(GraftCheck(site, before, spectral_radius(graft_transform(g, site))))
    return out


@dataclass(frozen=True)
class DeletionCheck:
    edge: tuple[int, int]
    energy_before: float
    energy_after: float

    @property
    def decreased(self) -> bool:
        return self.energy_before - self.energy_after > 1e-9


def check_edge_deletion_energy(g: Graph) -> list[DeletionCheck]:
    """Sombor energy before and after deleting each edge of a bipartite graph."""
    if not bipartite(g):
        raise NotBipartite("edge-deletion energy check needs a bipartite graph")
    before = sombor_energy(g)
    return [DeletionCheck(e, before, sombor_energy(delete_edge(g, *e))) for e in g.edges()]
