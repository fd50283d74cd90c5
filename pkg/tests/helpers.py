"""Independent oracle implementations for the test suite.

Everything here recomputes library results by a deliberately different
route (deque BFS instead of bitset BFS, cofactor expansion instead of the
trace recurrence, rational Gaussian elimination instead of fraction-free),
so exact agreement between the two is meaningful evidence.
"""

from collections import deque
from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from lapfam import Graph


def naive_distances(g, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return [dist.get(v) for v in range(g.n)]


def naive_distance_matrix(g):
    return [naive_distances(g, s) for s in range(g.n)]


def component_count(g):
    seen = set()
    count = 0
    for start in range(g.n):
        if start in seen:
            continue
        count += 1
        queue = deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return count


def poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_det(m):
    """Determinant of a matrix of polynomials (coefficient lists), by
    cofactor expansion along the first row."""
    if len(m) == 1:
        return m[0][0]
    total = [0]
    for j, entry in enumerate(m[0]):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = poly_mul(entry, poly_det(minor))
        if j % 2:
            term = [-t for t in term]
        total = poly_add(total, term)
    return total


def cofactor_charpoly(mat):
    """det(xI - mat) as ascending coefficients, degree n exactly."""
    n = len(mat)
    if n == 0:
        return [1]
    entries = [
        [[-mat[i][j], 1] if i == j else [-mat[i][j]] for j in range(n)]
        for i in range(n)
    ]
    out = poly_det(entries)
    return out + [0] * (n + 1 - len(out))


def fraction_rank(mat):
    rows = [[Fraction(x) for x in row] for row in mat]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def naive_outer_dimension(g):
    """Smallest outer multiset resolving set by full enumeration."""
    dist = naive_distance_matrix(g)
    for size in range(g.n + 1):
        for ws in combinations(range(g.n), size):
            outside = [u for u in range(g.n) if u not in ws]
            reps = [tuple(sorted(dist[u][w] for w in ws)) for u in outside]
            if len(set(reps)) == len(reps):
                return size, ws
    raise AssertionError("unreachable: the full vertex set always resolves")


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


@st.composite
def connected_graphs(draw, max_n=8):
    # random spanning tree plus extra edges, so no rejection sampling
    n = draw(st.integers(min_value=1, max_value=max_n))
    tree = [
        (draw(st.integers(min_value=0, max_value=i - 1)), i) for i in range(1, n)
    ]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tree + extra)
