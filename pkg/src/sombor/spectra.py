"""Sombor and adjacency matrices and everything derived from their spectra.

Matrices are plain read-only ``numpy`` arrays. Eigenvalues come from a cyclic
Jacobi solver (:func:`jacobi_eigh`); LAPACK is available as an alternative
through ``method="lapack"`` and is used by the tests as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import BadParams, Disconnected, NoConvergence, RangeError, SizeTooLarge
from .graph import Graph, is_connected

MAX_SWEEPS = 100
CHARPOLY_MAX_N = 20
ESTRADA_MAX_EXPONENT = 700.0


def weighted_matrix(g: Graph, weight: Callable[[int, int], float]) -> np.ndarray:
    """Symmetric matrix with ``weight(d_i, d_j)`` on edges and zeros elsewhere."""
    d = g.degrees
    M = np.zeros((g.n, g.n))
    for u, v in g.edges():
        M[u, v] = M[v, u] = weight(d[u], d[v])
    M.setflags(write=False)
    return M


def sombor_matrix(g: Graph) -> np.ndarray:
    return weighted_matrix(g, math.hypot)


def adjacency_matrix(g: Graph) -> np.ndarray:
    return weighted_matrix(g, lambda a, b: 1.0)


def isi_matrix(g: Graph) -> np.ndarray:
    """Inverse-sum-indeg weighted matrix, entries d_i d_j / (d_i + d_j) on edges."""
    return weighted_matrix(g, lambda a, b: a * b / (a + b))


def _round_robin(n: int) -> list[list[tuple[int, int]]]:
    """Partition all index pairs into n-1 (or n) rounds of disjoint pairs."""
    idx = list(range(n)) + ([-1] if n % 2 else [])
    k = len(idx)
    rounds = []
    for _ in range(k - 1):
        pairs = [(idx[i], idx[k - 1 - i]) for i in range(k // 2)]
        rounds.append([(min(p, q), max(p, q)) for p, q in pairs if p >= 0 and q >= 0])
        idx = [idx[0], idx[-1]] + idx[1:-1]
    return rounds


def jacobi_eigh(M: np.ndarray, vectors: bool = False,
                max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray | None]:
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Pairs are visited in round-robin order so that every round applies a set
    of disjoint rotations as one orthogonal similarity. Iteration stops once
    the off-diagonal Frobenius norm falls below ``1e-14 * ||M||_F``.

    Returns eigenvalues in ascending order and, if requested, the matching
    orthonormal eigenvectors as columns.
    """
    A = np.array(M, dtype=float)
    n = A.shape[0]
    V = np.eye(n) if vectors else None
    norm = float(np.linalg.norm(A))
    if n < 2 or norm == 0.0:
        order = np.argsort(np.diag(A), kind="stable")
        return np.diag(A)[order].copy(), (V[:, order] if V is not None else None)
    target = 1e-14 * norm
    rounds = [(np.array([p for p, _ in r]), np.array([q for _, q in r])) for r in _round_robin(n)]
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(A - np.diag(np.diag(A))))
        if off <= target:
            break
        for ps, qs in rounds:
            apq = A[ps, qs]
            active = apq != 0.0
            # A subnormal apq overflows theta to inf, which correctly yields t = 0.
            with np.errstate(over="ignore"):
                theta = np.divide(A[qs, qs] - A[ps, ps], 2.0 * apq,
                                  out=np.zeros_like(apq), where=active)
                t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            J = np.eye(n)
            J[ps, ps] = c
            J[qs, qs] = c
            J[ps, qs] = s
            J[qs, ps] = -s
            A = J.T @ A @ J
            A[ps, qs] = 0.0
            A[qs, ps] = 0.0
            if V is not None:
                V = V @ J
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    return w[order], (V[:, order] if V is not None else None)


def _check_symmetric(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise BadParams(f"expected a square matrix, got shape {M.shape}")
    if not np.array_equal(M, M.T):
        raise BadParams("matrix is not exactly symmetric")
    return M


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted non-increasing, with inertia under ``zero_tol``."""

    eigenvalues: tuple[float, ...]
    zero_tol: float
    frobenius: float
    p: int
    n0: int
    q: int

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def inertia(self) -> tuple[int, int, int]:
        return self.p, self.n0, self.q

    @property
    def rank(self) -> int:
        return self.n - self.n0

    @property
    def radius(self) -> float:
        return self.eigenvalues[0] if self.eigenvalues else 0.0

    @property
    def energy(self) -> float:
        return math.fsum(abs(x) for x in self.eigenvalues)

    @property
    def estrada(self) -> float:
        if self.eigenvalues and self.eigenvalues[0] > ESTRADA_MAX_EXPONENT:
            raise RangeError(f"exp({self.eigenvalues[0]:.6g}) overflows double precision")
        return math.fsum(math.exp(x) for x in self.eigenvalues)

    def array(self) -> np.ndarray:
        return np.array(self.eigenvalues)


def spectrum_from_values(values: Sequence[float], frobenius: float) -> Spectrum:
    vals = tuple(sorted((float(x) for x in values), reverse=True))
    tol = 1e-8 * max(1.0, frobenius)
    p = sum(1 for x in vals if x > tol)
    q = sum(1 for x in vals if x < -tol)
    return Spectrum(vals, tol, frobenius, p, len(vals) - p - q, q)


def eigenvalues(M: np.ndarray, method: str = "jacobi") -> Spectrum:
    """Full spectrum of a symmetric matrix.

    ``method`` is ``"jacobi"`` (default) or ``"lapack"``.
    """
    M = _check_symmetric(M)
    if method == "jacobi":
        w, _ = jacobi_eigh(M)
    elif method == "lapack":
        w = np.linalg.eigvalsh(M)
    else:
        raise BadParams(f"unknown eigen method {method!r}")
    return spectrum_from_values(w, float(np.linalg.norm(M)))


@lru_cache(maxsize=4096)
def sombor_spectrum(g: Graph) -> Spectrum:
    return eigenvalues(sombor_matrix(g))


@lru_cache(maxsize=4096)
def adjacency_spectrum(g: Graph) -> Spectrum:
    return eigenvalues(adjacency_matrix(g))


def spectral_radius(g: Graph) -> float:
    return sombor_spectrum(g).radius


def sombor_energy(g: Graph) -> float:
    return sombor_spectrum(g).energy


def estrada_index(g: Graph) -> float:
    return sombor_spectrum(g).estrada


def log_abs_det(spec: Spectrum) -> float:
    """log |det| as a sum of logs; ``-inf`` when any eigenvalue is within zero_tol."""
    if spec.n0 > 0:
        return -math.inf
    return math.fsum(math.log(abs(x)) for x in spec.eigenvalues)


def determinant_abs(spec: Spectrum) -> float:
    return math.exp(log_abs_det(spec))


def abs_det_power(spec: Spectrum, power: float) -> float:
    """|det|^power computed from the log form (0 for singular spectra)."""
    log = log_abs_det(spec)
    return 0.0 if log == -math.inf else math.exp(power * log)


def trace_power_matrix(g: Graph, k: int) -> float:
    _check_trace_order(k)
    return float(np.trace(np.linalg.matrix_power(sombor_matrix(g), k)))


def _check_trace_order(k: int) -> None:
    if k not in (2, 3, 4):
        raise BadParams(f"trace power k must be 2, 3 or 4, got {k}")


def trace_power_combinatorial(g: Graph, k: int) -> float:
    """tr(S^k) for k = 2, 3, 4 from degree/common-neighbour sums.

    k=2 is 2F; k=3 sums, over edges ij, the edge weight times the weights of
    every triangle closed through a common neighbour, doubled; k=4 adds the
    squared diagonal of S^2 to the squared off-diagonal common-neighbour sums
    over ordered pairs i != j.
    """
    _check_trace_order(k)
    d = g.degrees
    so = lambda a, b: d[a] ** 2 + d[b] ** 2  # noqa: E731
    if k == 2:
        return float(2 * sum(so(u, v) for u, v in g.edges()))
    nbrs = [set(a) for a in g.adj]

    def walk2(i: int, j: int) -> float:
        return math.fsum(math.sqrt(so(i, c) * so(j, c)) for c in nbrs[i] & nbrs[j])

    if k == 3:
        return 2.0 * math.fsum(math.sqrt(so(i, j)) * walk2(i, j) for i, j in g.edges())
    diag = math.fsum(float(sum(so(i, c) for c in nbrs[i])) ** 2 for i in range(g.n))
    off = math.fsum(walk2(i, j) ** 2 for i in range(g.n) for j in range(g.n) if i != j)
    return diag + off


@dataclass(frozen=True)
class CharPoly:
    """Coefficients of x^n + c_1 x^(n-1) + ... + c_n, highest degree first."""

    coefficients: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in self.coefficients:
            acc = acc * x + c
        return acc


def char_poly(M: np.ndarray) -> CharPoly:
    """Characteristic polynomial |xI - M| by the Faddeev-LeVerrier recurrence."""
    M = _check_symmetric(M)
    n = M.shape[0]
    if n > CHARPOLY_MAX_N:
        raise SizeTooLarge(f"char_poly is limited to n <= {CHARPOLY_MAX_N}, got {n}")
    coeffs = [1.0]
    B = np.zeros_like(M)
    eye = np.eye(n)
    for k in range(1, n + 1):
        B = M @ B + coeffs[-1] * eye
        coeffs.append(-float(np.trace(M @ B)) / k)
    return CharPoly(tuple(coeffs))


def charpoly_from_eigenvalues(values: Sequence[float]) -> CharPoly:
    """Expand prod(x - rho_i)."""
    coeffs = [1.0]
    for r in values:
        coeffs = [a - r * b for a, b in zip(coeffs + [0.0], [0.0] + coeffs)]
    return CharPoly(tuple(coeffs))


@dataclass(frozen=True)
class PerronVector:
    components: tuple[float, ...]
    eigenvalue: float
    iterations: int


def perron_vector(g: Graph, max_iter: int = 200_000) -> PerronVector:
    """Positive unit eigenvector of S(g) for rho_1, by shifted power iteration.

    The shift rho_1/2 keeps -rho_1 (present for bipartite graphs) from
    competing with rho_1.
    """
    if g.n < 2 or not is_connected(g):
        raise Disconnected("the Perron vector needs a connected graph with n >= 2")
    S = np.array(sombor_matrix(g))
    rho = spectral_radius(g)
    shifted = S + 0.5 * rho * np.eye(g.n)
    x = np.full(g.n, 1.0 / math.sqrt(g.n))
    target = 1e-10 * max(1.0, rho)
    for it in range(1, max_iter + 1):
        y = shifted @ x
        x = y / np.linalg.norm(y)
        Sx = S @ x
        lam = float(x @ Sx)
        if np.linalg.norm(Sx - lam * x) <= 0.5 * target:
            return PerronVector(tuple(float(v) for v in x), lam, it)
    raise NoConvergence(f"power iteration did not converge in {max_iter} steps")


def reference_adjacency_energy(kind: str, n: int) -> float:
    """Closed-form adjacency energy of the path or star on n >= 3 vertices."""
    if n < 3:
        raise BadParams(f"reference energies need n >= 3, got {n}")
    if kind == "star":
        return 2.0 * math.sqrt(n - 1)
    if kind == "path":
        a = math.pi / (2 * (n + 1))
        return (2.0 / math.sin(a) if n % 2 == 0 else 2.0 / math.tan(a)) - 2.0
    raise BadParams(f"unknown reference kind {kind!r}")


def distinct_eigenvalue_count(spec: Spectrum, rel_gap: float = 1e-6) -> int:
    """Cluster sorted eigenvalues; a new value starts past a gap of rel_gap*||M||_F."""
    gap = rel_gap * max(spec.frobenius, 1e-300)
    vals = spec.eigenvalues
    return 0 if not vals else 1 + sum(1 for a, b in zip(vals, vals[1:]) if a - b > gap)


def has_equal_moduli(spec: Spectrum, tol: float = 1e-8) -> bool:
    mods = [abs(x) for x in spec.eigenvalues]
    return not mods or max(mods) - min(mods) <= tol


def interlaces(outer: Sequence[float], inner: Sequence[float], tol: float = 1e-8) -> bool:
    """Cauchy interlacing of an (n-1)-principal submatrix spectrum in the full one.

    Both sequences are sorted non-increasing.
    """
    if len(inner) != len(outer) - 1:
        raise BadParams(f"expected {len(outer) - 1} inner eigenvalues, got {len(inner)}")
    return all(outer[i + 1] - tol <= inner[i] <= outer[i] + tol for i in range(len(inner)))
