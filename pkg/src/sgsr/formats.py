"""graph6 and ``.sg`` text formats.

``.sg`` is a plain signed edge list::

    n m
    u v +
    u v -

with 0-based vertices and edges sorted on output.  Blank lines and ``#``
comments are ignored when reading.  graph6 support is limited to the short
form (at most 62 vertices).
"""

from __future__ import annotations

from .graph import GraphError, SignedGraph, from_edge_list, from_masks

G6_HEADER = ">>graph6<<"
G6_MAX_ORDER = 62


class Graph6Error(ValueError):
    pass


class Graph6HeaderError(Graph6Error):
    """The order byte is missing, out of range, or announces the long form."""


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6CharError(Graph6Error):
    pass


class SgFormatError(ValueError):
    pass


class SgSignTokenError(SgFormatError):
    pass


def parse_graph6(text: str) -> SignedGraph:
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):]
    if not s:
        raise Graph6HeaderError("empty graph6 line")
    n = ord(s[0]) - 63
    if not 0 <= n <= G6_MAX_ORDER:
        raise Graph6HeaderError(f"order byte {s[0]!r} not in short form")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise Graph6TruncatedError(f"order {n} needs {need} data bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"{len(body) - need} trailing bytes after graph data")
    bits = 0
    for ch in body:
        x = ord(ch) - 63
        if not 0 <= x < 64:
            raise Graph6CharError(f"byte {ch!r} outside graph6 range")
        bits = bits << 6 | x
    bits >>= 6 * need - nbits
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return from_masks(adj)


def encode_graph6(g: SignedGraph) -> str:
    """graph6 of the underlying graph; signs are dropped."""
    n = g.n
    if n > G6_MAX_ORDER:
        raise Graph6Error(f"order {n} needs the long form")
    out = [chr(n + 63)]
    acc = 0
    count = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


def write_sg(g: SignedGraph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines += [f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in edges]
    return "\n".join(lines) + "\n"


def parse_sg(text: str) -> SignedGraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise SgFormatError("missing 'n m' header")
    lineno, head = rows[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise SgFormatError(f"line {lineno}: header must be 'n m'") from None
    if len(rows) - 1 != m:
        raise SgFormatError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, toks in rows[1:]:
        if len(toks) != 3:
            raise SgFormatError(f"line {lineno}: expected 'u v s'")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise SgFormatError(f"line {lineno}: vertex is not an integer") from None
        if toks[2] not in ("+", "-"):
            raise SgSignTokenError(f"line {lineno}: sign token {toks[2]!r}")
        edges.append((u, v, 1 if toks[2] == "+" else -1))
    try:
        return from_edge_list(n, edges)
    except GraphError as exc:
        raise type(exc)(f"{exc} in .sg input") from None


def read_sg(path) -> SignedGraph:
    with open(path) as fh:
        return parse_sg(fh.read())
