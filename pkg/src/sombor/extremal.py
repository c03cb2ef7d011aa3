"""Exhaustive extremal search of spectral invariants over graph corpora."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import BadParams, EmptyCorpus, SizeUnsupported, SomborError
from .formats import write_graph6
from .graph import Graph
from .invariants import sombor_index
from .spectra import estrada_index, sombor_energy, spectral_radius
from .trees import enumerate_trees

log = logging.getLogger(__name__)

INVARIANTS: dict[str, Callable[[Graph], float]] = {
    "spectral_radius": spectral_radius,
    "energy": sombor_energy,
    "estrada": estrada_index,
    "sombor_index": sombor_index,
}
ALIASES = {"rho1": "spectral_radius", "E": "energy", "EE": "estrada", "SO": "sombor_index"}
OBJECTIVES = ("min", "max")
TIE_RTOL = 1e-9
TREE_SWEEP_RANGE = range(3, 13)


def resolve_invariant(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in INVARIANTS:
        raise BadParams(f"unknown invariant {name!r}")
    return name


@dataclass(frozen=True)
class ExtremalResult:
    invariant: str
    objective: str
    corpus: str
    optimum: float
    witnesses: tuple[tuple[str, float], ...]
    evaluated: int = 0
    skipped: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "invariant": self.invariant,
            "objective": self.objective,
            "corpus": self.corpus,
            "optimum": self.optimum,
            "witnesses": [list(w) for w in self.witnesses],
            "evaluated": self.evaluated,
            "skipped": list(self.skipped),
        }


def sweep(corpus: Iterable[Graph], invariant: str, objective: str,
          description: str = "corpus") -> ExtremalResult:
    """Optimise ``invariant`` over ``corpus`` and collect every tie.

    Ties are values within 1e-9 * max(1, |optimum|) of the optimum; they are
    sorted by graph6 string so the result does not depend on corpus order.
    Graphs whose evaluation fails numerically are skipped and listed.
    """
    invariant = resolve_invariant(invariant)
    if objective not in OBJECTIVES:
        raise BadParams(f"objective must be min or max, got {objective!r}")
    fn = INVARIANTS[invariant]
    sign = 1.0 if objective == "min" else -1.0
    values: list[tuple[str, float]] = []
    skipped = []
    for g in corpus:
        code = write_graph6(g)
        try:
            values.append((code, float(fn(g))))
        except (SomborError, ArithmeticError) as exc:
            log.warning("skipping %s: %s", code, exc)
            skipped.append(code)
    if not values:
        raise EmptyCorpus("no graph in the corpus could be evaluated")
    best = min(sign * v for _, v in values) * sign
    tol = TIE_RTOL * max(1.0, abs(best))
    ties = sorted((c, v) for c, v in values if abs(v - best) <= tol)
    return ExtremalResult(invariant, objective, description, best, tuple(ties),
                          len(values), tuple(sorted(skipped)))


def tree_sweep(n_range: Iterable[int], invariant: str, objective: str) -> list[ExtremalResult]:
    """One :func:`sweep` over all free trees for each order in ``n_range``."""
    ns = list(n_range)
    for n in ns:
        if n not in TREE_SWEEP_RANGE:
            raise SizeUnsupported(f"tree sweeps support 3 <= n <= 12, got {n}")
    return [sweep(enumerate_trees(n), invariant, objective, f"trees n={n}") for n in ns]
