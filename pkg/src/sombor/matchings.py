"""Matching sums, the matching form of the Sombor characteristic polynomial,
and the Coulson integral for Sombor energy.

The matching form ``sum_k (-1)^k b_k x^(n-2k)`` equals |xI - S(G)| exactly for
forests. For bipartite graphs that contain cycles the true characteristic
polynomial carries extra cycle terms, so the matching form (and the Coulson
integral built from it) is only an approximation there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotBipartite, SizeTooLarge
from .graph import Graph, bipartite
from .quadrature import QuadResult, integrate
from .spectra import CharPoly

MATCHING_MAX_N = 24


@dataclass(frozen=True)
class MatchingPolynomial:
    """``b[k]`` is the sum over k-matchings of the product of edge weights."""

    b: tuple[int, ...]

    @property
    def matching_number(self) -> int:
        return max(k for k, x in enumerate(self.b) if x)


def matching_coefficients(g: Graph, weighted: bool = True) -> MatchingPolynomial:
    """k-matching sums with SO-values d_i^2 + d_j^2 as weights, or plain counts.

    Weights always use the degrees of ``g`` itself. Recursion: the lowest
    remaining vertex is either left unmatched or matched to one of its
    remaining neighbours; results are memoised per remaining vertex set.
    """
    if g.n > MATCHING_MAX_N:
        raise SizeTooLarge(f"matching enumeration limited to n <= {MATCHING_MAX_N}, got {g.n}")
    d = g.degrees
    weight = {}
    for u, v in g.edges():
        weight[u, v] = weight[v, u] = d[u] ** 2 + d[v] ** 2 if weighted else 1
    nbr_mask = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
    memo: dict[int, list[int]] = {}

    def count(mask: int) -> list[int]:
        if not mask:
            return [1]
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        live = nbr_mask[v] & rest
        if not live:
            out = count(rest)
        else:
            out = list(count(rest))
            while live:
                u = (live & -live).bit_length() - 1
                live &= live - 1
                sub = count(rest & ~(1 << u))
                w = weight[v, u]
                if len(out) < len(sub) + 1:
                    out.extend([0] * (len(sub) + 1 - len(out)))
                for k, x in enumerate(sub):
                    out[k + 1] += w * x
        memo[mask] = out
        return out

    b = count((1 << g.n) - 1)
    return MatchingPolynomial(tuple(b))


def sombor_charpoly_bipartite(g: Graph) -> CharPoly:
    """sum_k (-1)^k b_k x^(n-2k), coefficients listed from x^n down to x^0."""
    if not bipartite(g):
        raise NotBipartite("the matching form needs a bipartite graph")
    b = matching_coefficients(g).b
    coeffs = [0] * (g.n + 1)
    for k, x in enumerate(b):
        coeffs[2 * k] = -x if k % 2 else x
    return CharPoly(tuple(coeffs))


def _log_poly(b: tuple[int, ...], t: float) -> float:
    """log(b_0 + b_1 t + ... + b_K t^K) for 0 <= t <= 1."""
    acc = 0.0
    for x in reversed(b[1:]):
        acc = (acc + x) * t
    return math.log1p(acc / b[0]) + math.log(b[0])


def coulson_integral(b: tuple[int, ...], rel_tol: float = 1e-10) -> QuadResult:
    """(1/pi) * integral over the real line of x^-2 log(1 + sum_k b_k x^2k).

    The even integrand is folded onto [0, inf) and mapped to (0, pi/2) with
    x = tan(theta), giving log P(tan^2 theta) / sin^2 theta, whose limit at
    theta -> 0 is b_1. Past pi/4 the log singularity at pi/2 is removed
    exactly: log P(t) = K log t + log Q(1/t) with Q the reversed polynomial,
    and the K log t part integrates to 2K in closed form.
    """
    b = tuple(b)
    while len(b) > 1 and b[-1] == 0:
        b = b[:-1]
    K = len(b) - 1
    if K == 0:
        return QuadResult(0.0, 0.0, 0, 1, 0)
    rev = b[::-1]
    quarter = 0.25 * math.pi

    def integrand(theta: float) -> float:
        s = math.sin(theta)
        if s < 1e-150:
            return float(b[1])
        if theta <= quarter:
            return _log_poly(b, math.tan(theta) ** 2) / (s * s)
        return _log_poly(rev, (math.cos(theta) / s) ** 2) / (s * s)

    res = integrate(integrand, (0.0, quarter, 0.5 * math.pi), rel_tol=rel_tol)
    scale = 2.0 / math.pi
    return QuadResult((res.value + 2 * K) * scale, res.error * scale, res.levels,
                      res.intervals, res.evaluations)


def coulson_energy(g: Graph, rel_tol: float = 1e-10) -> float:
    """Sombor energy of a bipartite graph from its matching coefficients.

    Exact for forests; see the module docstring for graphs with cycles.
    """
    if not bipartite(g):
        raise NotBipartite("the Coulson integral is stated for bipartite graphs")
    return coulson_integral(matching_coefficients(g).b, rel_tol).value
