"""Simple undirected graphs with exact integer distances.

Vertices are 0-based indices.  Each vertex's neighbourhood is stored as a
Python int used as a bitset, so BFS frontiers expand with wordwise OR.
Graphs are immutable after construction and safe for concurrent reads.
External reports (CLI, file formats) print 1-based vertex numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class DisconnectedGraphError(ValueError):
    """Raised when an operation requires a connected graph."""


@dataclass(frozen=True)
class Combination:
    """Vertex label: a nondecreasing integer sequence over {1..d}."""

    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b < a for a, b in zip(self.seq, self.seq[1:])):
            raise ValueError(f"combination label must be nondecreasing: {self.seq}")
        if self.seq and self.seq[0] < 1:
            raise ValueError(f"combination entries must be >= 1: {self.seq}")

    @property
    def ones(self) -> int:
        """Number of entries equal to 1 (the initial run, since nondecreasing)."""
        return sum(1 for v in self.seq if v == 1)

    def __str__(self) -> str:
        if all(v <= 9 for v in self.seq):
            return "".join(str(v) for v in self.seq)
        return "-".join(str(v) for v in self.seq)


@dataclass(frozen=True)
class Resolver:
    """Vertex label: the i-th landmark vertex of a resolving set, written w_i."""

    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"resolver index must be >= 1: {self.index}")

    def __str__(self) -> str:
        return f"w{self.index}"


Label = Combination | Resolver


class Graph:
    """Immutable simple undirected graph with optional vertex labels.

    ``labels`` is either None (unlabeled graph) or a length-n tuple whose
    entries are Label instances or None; present labels must be pairwise
    distinct.
    """

    __slots__ = ("_n", "_m", "_adj", "_labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[Label | None] | None = None,
    ) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative: {n}")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not adj[u] >> v & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                m += 1
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
            present = [lab for lab in labels if lab is not None]
            if len(set(present)) != len(present):
                raise ValueError("vertex labels must be pairwise distinct")
        self._n = n
        self._m = m
        self._adj = tuple(adj)
        self._labels = labels

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, ((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def labels(self) -> tuple[Label | None, ...] | None:
        return self._labels

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> Iterator[int]:
        return _iter_bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self._n):
            for v in _iter_bits(self._adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def with_labels(self, labels: Sequence[Label | None] | None) -> "Graph":
        """Same adjacency, different labels."""
        return Graph(self._n, self.edges(), labels)

    def __repr__(self) -> str:
        tag = ", labeled" if self._labels is not None else ""
        return f"Graph(n={self._n}, m={self._m}{tag})"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Shortest-path distance from ``source`` to every vertex (None = unreachable)."""
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range for n={g.n}")
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        reach = 0
        for v in _iter_bits(frontier):
            reach |= g.neighbor_mask(v)
        frontier = reach & ~seen
        seen |= frontier
        d += 1
        for v in _iter_bits(frontier):
            dist[v] = d
    return dist


def all_pairs_distances(g: Graph) -> list[list[int | None]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def eccentricities(g: Graph) -> list[int]:
    """Eccentricity of every vertex; raises DisconnectedGraphError on any unreachable pair."""
    if g.n == 0:
        raise ValueError("eccentricities of the empty graph are undefined")
    out = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if any(d is None for d in dist):
            raise DisconnectedGraphError(f"vertex {v} cannot reach the whole graph")
        out.append(max(dist))  # type: ignore[type-var]
    return out


def diameter(g: Graph) -> int:
    return max(eccentricities(g))


def radius(g: Graph) -> int:
    return min(eccentricities(g))


def _concat_labels(g1: Graph, g2: Graph) -> tuple[Label | None, ...] | None:
    # Duplicate labels across the two parts keep the first occurrence; the
    # later copy becomes an unlabeled vertex (keeps labels pairwise distinct).
    if g1.labels is None and g2.labels is None:
        return None
    first = g1.labels if g1.labels is not None else (None,) * g1.n
    second = g2.labels if g2.labels is not None else (None,) * g2.n
    out: list[Label | None] = list(first)
    seen = {lab for lab in first if lab is not None}
    for lab in second:
        if lab is not None and lab in seen:
            out.append(None)
        else:
            out.append(lab)
            if lab is not None:
                seen.add(lab)
    return tuple(out)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; g1's vertices come first, g2's are shifted by g1.n."""
    off = g1.n
    edges = list(g1.edges()) + [(u + off, v + off) for u, v in g2.edges()]
    return Graph(g1.n + g2.n, edges, _concat_labels(g1, g2))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts (g1 first)."""
    off = g1.n
    edges = list(g1.edges())
    edges += [(u + off, v + off) for u, v in g2.edges()]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, edges, _concat_labels(g1, g2))


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees in nonincreasing order."""
    return sorted((g.degree(v) for v in range(g.n)), reverse=True)


def are_adjacency_equal(g1: Graph, g2: Graph) -> bool:
    """True iff both graphs have identical adjacency under the identity vertex map.

    Labels are ignored.  This is not an isomorphism test.
    """
    if g1.n != g2.n:
        raise ValueError(f"size mismatch: {g1.n} != {g2.n}")
    return all(g1.neighbor_mask(v) == g2.neighbor_mask(v) for v in range(g1.n))


def permuted(g: Graph, order: Sequence[int]) -> Graph:
    """Reindex so that new vertex k is old vertex order[k]."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of range(n)")
    pos = [0] * g.n
    for new, old in enumerate(order):
        pos[old] = new
    edges = [(pos[u], pos[v]) for u, v in g.edges()]
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[old] for old in order)
    return Graph(g.n, edges, labels)
