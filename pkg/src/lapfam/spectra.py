"""Exact Laplacian spectra of the d = 2 extended family, and gap-spectrum checks.

The extended graph on 2c+1 vertices has Laplacian spectrum
{0, 1, ..., 2c+1} \\ {c+1}, every eigenvalue simple, with closed-form
integer eigenvectors falling into four classes indexed by r = 0..2c.
``integral_spectrum`` extracts the integral part of any Laplacian
spectrum exactly: Laplacian eigenvalues lie in [0, n], so sweeping the
integer candidates 0..n with exact nullity computations is complete for
the integral part; what remains is reported by degree only.

A graph on n vertices *realizes the gap spectrum at i* when its Laplacian
spectrum is exactly {0..n} \\ {i} with every eigenvalue simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .families import resolver_graph_indexed
from .graphs import Graph, disjoint_union, join
from .linalg import IntMatrix


class VerificationError(Exception):
    """An exact eigenpair identity failed; pinpoints the first bad entry."""

    def __init__(self, r: int, row: int, message: str):
        super().__init__(message)
        self.r = r
        self.row = row


@dataclass(frozen=True)
class Spectrum:
    """Fully integral Laplacian spectrum: (eigenvalue, multiplicity) pairs,
    eigenvalues descending, plus the monic characteristic polynomial
    (coefficients by ascending degree)."""

    pairs: tuple[tuple[int, int], ...]
    charpoly: tuple[int, ...]

    @property
    def eigenvalues(self) -> tuple[int, ...]:
        """Eigenvalues with repetition, descending."""
        return tuple(lam for lam, mult in self.pairs for _ in range(mult))

    @property
    def distinct(self) -> bool:
        return all(mult == 1 for _, mult in self.pairs)


@dataclass(frozen=True)
class NonIntegralResidue:
    """Outcome when the spectrum is not fully integral: the degree of the
    non-integral factor, plus whatever integral part was found."""

    degree: int
    partial_pairs: tuple[tuple[int, int], ...]
    charpoly: tuple[int, ...]


@dataclass(frozen=True)
class EigenpairReport:
    c: int
    n: int
    eigenvalues: tuple[int, ...]
    rank: int


def laplacian(g: Graph) -> IntMatrix:
    """Degree matrix minus adjacency matrix."""
    return [
        [g.degree(i) if i == j else -int(g.adjacent(i, j)) for j in range(g.n)]
        for i in range(g.n)
    ]


def char_poly(mat: Sequence[Sequence[int]]) -> list[int]:
    """Monic characteristic polynomial det(xI - mat), ascending coefficients."""
    return linalg.char_poly(mat)


def integral_spectrum(lap: Sequence[Sequence[int]]) -> Spectrum | NonIntegralResidue:
    """Integral eigenvalues of a Laplacian with exact multiplicities.

    Multiplicity of each candidate in 0..n is the nullity of (L - lam*I).
    Returns a Spectrum when the multiplicities account for all n
    eigenvalues, otherwise a NonIntegralResidue.
    """
    n = len(lap)
    pairs = []
    total = 0
    for lam in range(n, -1, -1):
        shifted = [
            [lap[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)
        ]
        mult = linalg.nullity(shifted)
        if mult:
            pairs.append((lam, mult))
            total += mult
    cp = tuple(linalg.char_poly(lap))
    if total == n:
        return Spectrum(tuple(pairs), cp)
    return NonIntegralResidue(n - total, tuple(pairs), cp)


def eigenvalue_of_class(c: int, r: int) -> int:
    """Eigenvalue attached to eigenvector index r of the 2c+1 family member."""
    if not 0 <= r <= 2 * c:
        raise ValueError(f"r={r} out of range 0..{2 * c}")
    if r < c:
        return 2 * c - r + 1
    if r == c:
        return c
    if r < 2 * c:
        return 2 * c - r
    return 0


def eigenvector_family(c: int) -> IntMatrix:
    """The 2c+1 closed-form eigenvectors, as columns of a (2c+1) x (2c+1) matrix.

    Column r (with k = 2(r-c)+1 in the third class):
      r = 0..c-1:    r zeros, -2(c-r), then 2(c-r) ones, then r zeros
      r = c:         c zeros, -1, 1, then c-1 zeros
      r = c+1..2c-1: 2c-r zeros, k copies of -1, then k, then 2c-r-1 zeros
      r = 2c:        all ones
    """
    if c < 1:
        raise ValueError(f"c must be positive: {c}")
    n = 2 * c + 1
    cols = []
    for r in range(c):
        cols.append([0] * r + [-2 * (c - r)] + [1] * (2 * (c - r)) + [0] * r)
    cols.append([0] * c + [-1, 1] + [0] * (c - 1))
    for r in range(c + 1, 2 * c):
        k = 2 * (r - c) + 1
        cols.append([0] * (2 * c - r) + [-1] * k + [k] + [0] * (2 * c - r - 1))
    cols.append([1] * n)
    return [[cols[r][i] for r in range(n)] for i in range(n)]


def verify_eigenpairs(c: int) -> EigenpairReport:
    """Check L x = lambda x entrywise in integer arithmetic for every class,
    plus distinctness of the eigenvalues and full rank of the eigenvectors."""
    g = resolver_graph_indexed(c)
    lap = laplacian(g)
    vecs = eigenvector_family(c)
    n = g.n
    eigenvalues = []
    for r in range(n):
        lam = eigenvalue_of_class(c, r)
        eigenvalues.append(lam)
        x = [vecs[i][r] for i in range(n)]
        lx = linalg.mat_vec(lap, x)
        for row in range(n):
            if lx[row] != lam * x[row]:
                raise VerificationError(
                    r, row, f"(L x)[{row}] = {lx[row]} != {lam} * {x[row]} for column {r}"
                )
    if len(set(eigenvalues)) != n:
        raise VerificationError(-1, -1, f"eigenvalues not pairwise distinct: {eigenvalues}")
    rk = linalg.rank(vecs)
    if rk != n:
        raise VerificationError(-1, -1, f"eigenvector matrix rank {rk} != {n}")
    return EigenpairReport(c=c, n=n, eigenvalues=tuple(eigenvalues), rank=rk)


def rayleigh(lap: Sequence[Sequence[int]], x: Sequence[int | Fraction]) -> Fraction:
    """Exact Rayleigh quotient (x^T L x) / (x^T x).

    Also evaluated as sum over edges of (x_i - x_j)^2 divided by the square
    norm; the two routes must agree exactly.
    """
    n = len(lap)
    if len(x) != n:
        raise ValueError(f"vector length {len(x)} != {n}")
    xs = [Fraction(v) for v in x]
    norm2 = sum(v * v for v in xs)
    if norm2 == 0:
        raise ValueError("Rayleigh quotient of the zero vector is undefined")
    quad = sum(xs[i] * lap[i][j] * xs[j] for i in range(n) for j in range(n))
    edge_sum = sum(
        -lap[i][j] * (xs[i] - xs[j]) ** 2 for i in range(n) for j in range(i + 1, n)
    )
    if quad != edge_sum:
        raise ArithmeticError(f"quadratic form {quad} != edge sum {edge_sum}")
    return Fraction(quad, norm2)


def edge_partition_sums(c: int, x: Sequence[int | Fraction]) -> list[Fraction]:
    """Band sums N_1..N_c of the 2c+1 family member's edge partition.

    Band h collects the edges from vertex h (1-based) to vertices
    h+1..2c+2-h, so N_h = sum over that range of (x_h - x_j)^2.  The band
    sums total x^T L x for the indexed construction's Laplacian.
    """
    n = 2 * c + 1
    if len(x) != n:
        raise ValueError(f"vector length {len(x)} != {n}")
    xs = [Fraction(v) for v in x]
    return [
        sum((xs[h - 1] - xs[j - 1]) ** 2 for j in range(h + 1, 2 * c + 2 - h + 1))
        for h in range(1, c + 1)
    ]


def realizes_gap_spectrum(g: Graph, i: int) -> bool:
    """True iff the Laplacian spectrum of g is {0..n} \\ {i}, all simple."""
    n = g.n
    if not 0 <= i <= n:
        raise ValueError(f"excluded value {i} out of range 0..{n}")
    spec = integral_spectrum(laplacian(g))
    if not isinstance(spec, Spectrum):
        return False
    expected = tuple((lam, 1) for lam in range(n, -1, -1) if lam != i)
    return spec.pairs == expected


def realizability_step(h: Graph, i_prev: int, n_prev: int) -> Graph:
    """Grow a gap-spectrum graph by two vertices.

    Requires that h on n_prev vertices realizes the gap spectrum at i_prev;
    returns the join of a new vertex with (new isolated vertex + h), which
    the caller verifies realizes the gap spectrum at i_prev + 1.
    """
    if h.n != n_prev:
        raise ValueError(f"claimed order {n_prev} != actual {h.n}")
    if not realizes_gap_spectrum(h, i_prev):
        raise ValueError(
            f"input graph does not realize the gap spectrum at {i_prev} on {n_prev} vertices"
        )
    return join(Graph(1), disjoint_union(Graph(1), h))
