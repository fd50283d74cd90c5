"""Graph serialization: graph6, DOT, and a small csv edge list.

graph6 is the compact ASCII format used by nauty and friends: a byte-packed
vertex count followed by the upper triangle of the adjacency matrix in
column-major order, six bits per character, offset by 63.  Labels are not
representable in graph6 or the edge list, so reading either yields an
unlabeled graph; DOT output is write-only and keeps labels.
"""

from __future__ import annotations

from .graphs import Graph

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError(f"negative vertex count: {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"vertex count too large for graph6: {n}")


def _decode_n(text: str) -> tuple[int, int]:
    """Vertex count and number of characters consumed."""
    if not text:
        raise ValueError("empty graph6 string")
    if text[0] != "~":
        return ord(text[0]) - 63, 1
    if len(text) >= 2 and text[1] != "~":
        if len(text) < 4:
            raise ValueError("truncated graph6 vertex count")
        chunks = [ord(ch) - 63 for ch in text[1:4]]
        return (chunks[0] << 12) | (chunks[1] << 6) | chunks[2], 4
    if len(text) < 8:
        raise ValueError("truncated graph6 vertex count")
    chunks = [ord(ch) - 63 for ch in text[2:8]]
    n = 0
    for value in chunks:
        n = (n << 6) | value
    return n, 8


def write_graph6(g: Graph, header: bool = False) -> str:
    """One-line graph6 encoding (no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.adjacent(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    prefix = _HEADER if header else ""
    return prefix + _encode_n(g.n) + "".join(chars)


def read_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(_HEADER):
        line = line[len(_HEADER) :]
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"invalid graph6 character {ch!r}")
    n, consumed = _decode_n(line)
    body = line[consumed:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} characters, expected {need}")
    bits = []
    for ch in body:
        value = ord(ch) - 63
        bits.extend((value >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def write_dot(g: Graph, name: str = "g") -> str:
    """Undirected DOT text; vertex labels become node labels when present."""
    lines = [f"graph {name} {{"]
    labels = g.labels
    for v in range(g.n):
        if labels is not None and labels[v] is not None:
            lines.append(f'  n{v} [label="{labels[v]}"];')
        else:
            lines.append(f"  n{v};")
    for u, v in g.edges():
        lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_edgelist(g: Graph) -> str:
    """csv edge list with a ``u,v`` header; vertices are reported 1-based."""
    lines = ["u,v"]
    lines.extend(f"{u + 1},{v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edgelist(text: str) -> Graph:
    """Inverse of write_edgelist; the vertex count is the largest index seen,
    so trailing isolated vertices do not survive a round trip."""
    rows = [line.strip() for line in text.splitlines()]
    rows = [line for line in rows if line]
    if rows and rows[0].replace(" ", "").lower() == "u,v":
        rows = rows[1:]
    edges = []
    n = 0
    for line in rows:
        parts = line.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad edge list line: {line!r}")
        u, v = (int(p) for p in parts)
        if u < 1 or v < 1:
            raise ValueError(f"edge list vertices are 1-based: {line!r}")
        n = max(n, u, v)
        edges.append((u - 1, v - 1))
    return Graph(n, edges)


def read_graph_auto(text: str) -> Graph:
    """Sniff edge list vs graph6: any comma means edge list."""
    if "," in text:
        return read_edgelist(text)
    return read_graph6(text)
