"""graph6 and edge-list text formats.

Only the single-byte graph6 size field is supported, so ``n <= 62``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import (
    EdgeListError,
    Graph6Error,
    MalformedHeader,
    NonCanonicalPadding,
    SomborError,
    TooLarge,
    TruncatedBits,
)
from .graph import Graph, from_edge_list

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_N = 62


def _data_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def write_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_N:
        raise TooLarge(f"graph6 output limited to n <= {MAX_GRAPH6_N}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    record = line.strip()
    if not record:
        raise MalformedHeader("empty graph6 record")
    head = ord(record[0])
    if head == 126:
        raise TooLarge("multi-byte graph6 sizes (n > 62) are not supported")
    if not 63 <= head <= 125:
        raise MalformedHeader(f"invalid size byte {record[0]!r}")
    n = head - 63
    data = record[1:]
    need = _data_length(n)
    if len(data) < need:
        raise TruncatedBits(f"n={n} needs {need} data bytes, found {len(data)}")
    if len(data) > need:
        raise Graph6Error(f"n={n} needs {need} data bytes, found {len(data)}")
    bits: list[int] = []
    for ch in data:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise Graph6Error(f"invalid data byte {ch!r}")
        bits.extend((value >> s) & 1 for s in range(5, -1, -1))
    nbits = n * (n - 1) // 2
    if any(bits[nbits:]):
        raise NonCanonicalPadding("padding bits must be zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


class RecordError(SomborError, ValueError):
    """A parse failure tied to a 1-based input line number."""

    def __init__(self, lineno: int, cause: Exception):
        super().__init__(f"line {lineno}: {cause}")
        self.lineno = lineno
        self.cause = cause


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(lineno, graph)``; blank lines and ``>>graph6<<`` headers are skipped."""
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text.startswith(GRAPH6_HEADER):
            text = text[len(GRAPH6_HEADER):]
        if not text:
            continue
        try:
            yield lineno, parse_graph6(text)
        except SomborError as exc:
            raise RecordError(lineno, exc) from exc


def iter_edgelist(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield graphs from concatenated ``n m`` + ``m`` × ``u v`` blocks.

    Blank lines and ``#`` comments between records are ignored.
    """
    it = ((i, raw.split("#", 1)[0].split()) for i, raw in enumerate(lines, start=1))
    it = ((i, toks) for i, toks in it if toks)
    for lineno, toks in it:
        header = lineno
        try:
            n, m = _ints(toks, 2)
            edges = []
            for _ in range(m):
                try:
                    lineno, toks = next(it)
                except StopIteration:
                    raise EdgeListError(f"expected {m} edge lines, found {len(edges)}") from None
                edges.append(_ints(toks, 2))
            graph = from_edge_list(n, edges)
        except SomborError as exc:
            raise RecordError(lineno, exc) from exc
        yield header, graph


def _ints(toks: list[str], count: int) -> tuple[int, ...]:
    if len(toks) != count:
        raise EdgeListError(f"expected {count} integers, got {' '.join(toks)!r}")
    try:
        return tuple(int(t) for t in toks)
    except ValueError:
        raise EdgeListError(f"expected integers, got {' '.join(toks)!r}") from None


def read_graphs(stream: TextIO | Iterable[str], fmt: str = "graph6") -> list[Graph]:
    reader = {"graph6": iter_graph6, "edgelist": iter_edgelist}.get(fmt)
    if reader is None:
        raise ValueError(f"unknown format {fmt!r}")
    return [g for _, g in reader(stream)]


def load_graph6(path: str) -> list[Graph]:
    with open(path) as fh:
        return read_graphs(fh, "graph6")
