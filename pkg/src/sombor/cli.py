"""Command-line interface: ``sombor <command> ...``.

Exit codes: 0 success, 1 a mathematical violation (or an incomplete sweep),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence, TextIO

from . import bounds as B
from .errors import BadParams, NotBipartite, RangeError, SomborError
from .extremal import ALIASES, INVARIANTS, OBJECTIVES, sweep, tree_sweep
from .formats import RecordError, read_graphs, write_graph6
from .graph import FAMILIES, Graph, bipartite, family
from .invariants import index_values
from .matchings import coulson_integral, matching_coefficients, sombor_charpoly_bipartite
from .spectra import char_poly, charpoly_from_eigenvalues, determinant_abs, sombor_matrix, sombor_spectrum
from .trees import enumerate_trees

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
DIGITS = 12

log = logging.getLogger("sombor")


class UsageError(Exception):
    pass


def fmt(x):
    """Round floats to 12 significant digits; map non-finite values to None."""
    if isinstance(x, float):
        return float(f"{x:.{DIGITS}g}") if math.isfinite(x) else None
    if isinstance(x, dict):
        return {k: fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [fmt(v) for v in x]
    return x


def emit(obj, out: TextIO) -> None:
    out.write(json.dumps(fmt(obj)) + "\n")


def worker_count() -> int:
    raw = os.environ.get("SOMBOR_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise UsageError(f"SOMBOR_THREADS must be an integer >= 1, got {raw!r}")
    return value


def load_input(path: str, fmt_name: str) -> list[Graph]:
    if path == "-":
        return read_graphs(sys.stdin, fmt_name)
    try:
        with open(path) as fh:
            return read_graphs(fh, fmt_name)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _or_none(fn):
    try:
        return fn()
    except (RangeError, OverflowError):
        return None


def graph_report(g: Graph) -> dict:
    spec = sombor_spectrum(g)
    idx = index_values(g)
    p, n0, q = spec.inertia
    return {
        "graph6": write_graph6(g),
        "n": g.n,
        "m": g.m,
        "max_degree": g.max_degree if g.n else 0,
        "min_degree": g.min_degree if g.n else 0,
        "indices": {"SO": idx.sombor, "Z1": idx.first_zagreb, "F": idx.forgotten,
                    "ISI": idx.isi},
        "eigenvalues": [float(x) for x in spec.eigenvalues],
        "inertia": {"p": p, "n0": n0, "q": q},
        "rho1": spec.radius if g.n else 0.0,
        "energy": spec.energy,
        "estrada": _or_none(lambda: spec.estrada),
        "abs_det": _or_none(lambda: determinant_abs(spec)),
    }


def _map(fn, items: list, workers: int) -> list:
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items, chunksize=8))
    return [fn(x) for x in items]


def cmd_compute(args, out: TextIO) -> int:
    graphs = load_input(args.input, args.format)
    for rep in _map(graph_report, graphs, worker_count()):
        emit(rep, out)
    return EXIT_OK


def cmd_verify_bounds(args, out: TextIO) -> int:
    if args.bounds == "all":
        ids = [b.id for b in B.REGISTRY]
    else:
        ids = [s.strip() for s in args.bounds.split(",") if s.strip()]
        unknown = [i for i in ids if i not in B.BOUNDS]
        if unknown:
            raise UsageError(f"unknown bound id(s): {', '.join(unknown)}")
    rtol = B.EQUALITY_RTOL if args.tol is None else args.tol
    if not rtol > 0:
        raise UsageError("--tol must be positive")
    graphs = load_input(args.input, args.format)
    result = B.verify_corpus(graphs, ids, rtol=rtol, workers=worker_count())
    for r in result.reports:
        emit(r.to_dict(), out)
    s = result.summary
    print(s.describe(), file=sys.stderr)
    for code, bid, msg in s.errors:
        print(f"error {code} {bid}: {msg}", file=sys.stderr)
    if args.summary_csv:
        with open(args.summary_csv, "w") as fh:
            fh.write(s.to_csv())
    return EXIT_OK if result.ok else EXIT_VIOLATION


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"--n expects a..b, got {text!r}") from None
    if b < a:
        raise UsageError(f"empty range {text!r}")
    return range(a, b + 1)


def cmd_extremal(args, out: TextIO) -> int:
    if (args.family is None) == (args.input is None):
        raise UsageError("give exactly one of --family or --input")
    if args.family is not None:
        if args.n is None:
            raise UsageError("--family trees needs --n a..b")
        results = tree_sweep(_parse_range(args.n), args.invariant, args.objective)
    else:
        if args.n is not None:
            raise UsageError("--n only applies to --family")
        graphs = load_input(args.input, args.format)
        results = [sweep(graphs, args.invariant, args.objective, args.input)]
    for res in results:
        emit(res.to_dict(), out)
    return EXIT_VIOLATION if any(r.skipped for r in results) else EXIT_OK


def _snap(coeffs: Sequence[float]) -> list[float]:
    scale = max(abs(c) for c in coeffs)
    return [0.0 if abs(c) <= 1e-10 * scale else float(c) for c in coeffs]


def cmd_charpoly(args, out: TextIO) -> int:
    graphs = load_input(args.input, args.format)
    for g in graphs:
        if args.method == "eigen":
            coeffs = _snap(charpoly_from_eigenvalues(sombor_spectrum(g).eigenvalues).coefficients)
        elif args.method == "leverrier":
            coeffs = _snap(char_poly(sombor_matrix(g)).coefficients)
        else:
            coeffs = list(sombor_charpoly_bipartite(g).coefficients)
        emit({"graph6": write_graph6(g), "method": args.method, "coefficients": coeffs}, out)
    return EXIT_OK


def cmd_coulson(args, out: TextIO) -> int:
    graphs = load_input(args.input, args.format)
    for g in graphs:
        if not bipartite(g):
            raise NotBipartite(f"{write_graph6(g)} is not bipartite")
        res = coulson_integral(matching_coefficients(g).b, rel_tol=args.tol)
        emit({"graph6": write_graph6(g), "energy": res.value, "error": res.error,
              "levels": res.levels, "intervals": res.intervals,
              "evaluations": res.evaluations}, out)
    return EXIT_OK


def cmd_gen(args, out: TextIO) -> int:
    if args.family == "trees":
        if len(args.params) != 1:
            raise BadParams("trees takes one parameter n")
        graphs = enumerate_trees(args.params[0])
    else:
        graphs = [family(args.family, *args.params)]
    for g in graphs:
        out.write(write_graph6(g) + "\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sombor", description="Sombor spectra, bounds and extremal search")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(sp):
        sp.add_argument("input", nargs="?", default="-", help="file path, or - for stdin")
        sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        return sp

    sp = with_input(sub.add_parser("compute", help="per-graph indices and spectrum"))
    sp.set_defaults(fn=cmd_compute)

    sp = with_input(sub.add_parser("verify-bounds", help="check the bound registry"))
    sp.add_argument("--bounds", default="all", help="comma-separated ids, or all")
    sp.add_argument("--tol", type=float, default=None, help="relative equality tolerance")
    sp.add_argument("--summary-csv", default=None, help="write per-bound counts here")
    sp.set_defaults(fn=cmd_verify_bounds)

    sp = sub.add_parser("extremal", help="exhaustive min/max search")
    sp.add_argument("--family", choices=("trees",))
    sp.add_argument("--n", help="order range a..b for --family")
    sp.add_argument("--input", help="graph6 or edge-list corpus file")
    sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    sp.add_argument("--invariant", required=True,
                    choices=sorted(INVARIANTS) + sorted(ALIASES))
    sp.add_argument("--objective", required=True, choices=OBJECTIVES)
    sp.set_defaults(fn=cmd_extremal)

    sp = with_input(sub.add_parser("charpoly", help="characteristic polynomial coefficients"))
    sp.add_argument("--method", choices=("eigen", "leverrier", "matchings"), default="eigen")
    sp.set_defaults(fn=cmd_charpoly)

    sp = with_input(sub.add_parser("coulson", help="energy by the Coulson integral"))
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.set_defaults(fn=cmd_coulson)

    sp = sub.add_parser("gen", help="write graph6 lines for a family")
    sp.add_argument("family", choices=sorted(FAMILIES) + ["trees"])
    sp.add_argument("params", nargs="*", type=int)
    sp.set_defaults(fn=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(message)s")
        return args.fn(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RecordError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SomborError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
