"""Signed graphs stored as per-vertex bitset rows.

A signed graph on ``n`` vertices keeps two integer masks per vertex: ``adj[v]``
has bit ``u`` set when ``uv`` is an edge, and ``neg[v]`` has bit ``u`` set when
that edge is negative.  Vertices are 0-based.  Instances are immutable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Base class for malformed signed-graph input."""


class SelfLoopError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class SignError(GraphError):
    pass


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class DegreeTriple(NamedTuple):
    d: int
    dpos: int
    dneg: int

    @property
    def net(self) -> int:
        return self.dpos - self.dneg


class WalkCounts2(NamedTuple):
    pos: int
    neg: int

    @property
    def value(self) -> int:
        """The corresponding entry of the squared sign matrix."""
        return self.pos - self.neg


@dataclass(frozen=True)
class SignedGraph:
    n: int
    adj: tuple[int, ...]
    neg: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise VertexRangeError(f"order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n or len(self.neg) != self.n:
            raise GraphError("row count does not match order")
        full = (1 << self.n) - 1
        for v in range(self.n):
            a, b = self.adj[v], self.neg[v]
            if a & ~full or b & ~full:
                raise VertexRangeError(f"row {v} references a vertex >= {self.n}")
            if a >> v & 1:
                raise SelfLoopError(f"self-loop at {v}")
            if b & ~a:
                raise GraphError(f"row {v}: negative bit without edge")
            for u in iter_bits(a):
                if not self.adj[u] >> v & 1 or (self.neg[u] >> v & 1) != (b >> u & 1):
                    raise GraphError(f"asymmetric entry at ({v}, {u})")

    @property
    def pos(self) -> tuple[int, ...]:
        return tuple(a & ~b for a, b in zip(self.adj, self.neg))

    def sign(self, u: int, v: int) -> int:
        if not self.adj[u] >> v & 1:
            return 0
        return -1 if self.neg[u] >> v & 1 else 1

    def edges(self) -> list[tuple[int, int, int]]:
        """Signed edges ``(u, v, s)`` with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v, -1 if self.neg[u] >> v & 1 else 1))
        return out

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(a == full & ~(1 << v) for v, a in enumerate(self.adj))

    def is_edgeless(self) -> bool:
        return not any(self.adj)

    def is_homogeneous(self) -> bool:
        """True when all edges share one sign (vacuously for edgeless graphs)."""
        return not any(self.neg) or self.neg == self.adj

    def matrix(self) -> list[list[int]]:
        return [[self.sign(u, v) for v in range(self.n)] for u in range(self.n)]

    def relabel(self, perm: Sequence[int]) -> SignedGraph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        neg = [0] * self.n
        for v in range(self.n):
            pv = perm[v]
            for u in iter_bits(self.adj[v]):
                adj[pv] |= 1 << perm[u]
            for u in iter_bits(self.neg[v]):
                neg[pv] |= 1 << perm[u]
        return SignedGraph(self.n, tuple(adj), tuple(neg))

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, m={self.num_edges}, neg={sum(b.bit_count() for b in self.neg) // 2})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int, int]]) -> SignedGraph:
    adj = [0] * n
    neg = [0] * n
    for u, v, s in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        if s not in (1, -1):
            raise SignError(f"sign {s!r} on edge ({u}, {v})")
        if adj[u] >> v & 1:
            raise DuplicateEdgeError(f"edge ({u}, {v}) given twice")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        if s < 0:
            neg[u] |= 1 << v
            neg[v] |= 1 << u
    return SignedGraph(n, tuple(adj), tuple(neg))


def from_matrix(rows: Sequence[Sequence[int]]) -> SignedGraph:
    n = len(rows)
    edges = []
    for u in range(n):
        if len(rows[u]) != n:
            raise GraphError("matrix is not square")
        if rows[u][u]:
            raise SelfLoopError(f"nonzero diagonal at {u}")
        for v in range(u + 1, n):
            if rows[u][v] != rows[v][u]:
                raise GraphError(f"asymmetric entry at ({u}, {v})")
            if rows[u][v]:
                edges.append((u, v, rows[u][v]))
    return from_edge_list(n, edges)


def from_masks(adj: Sequence[int], neg: Sequence[int] | None = None) -> SignedGraph:
    n = len(adj)
    return SignedGraph(n, tuple(adj), tuple(neg) if neg is not None else (0,) * n)


def complete_graph(n: int) -> SignedGraph:
    full = (1 << n) - 1
    return from_masks([full & ~(1 << v) for v in range(n)])


def with_negative_edges(g: SignedGraph, negative: Iterable[tuple[int, int]]) -> SignedGraph:
    """Underlying graph of ``g`` with exactly the listed edges negative."""
    neg = [0] * g.n
    for u, v in negative:
        if not g.adj[u] >> v & 1:
            raise GraphError(f"({u}, {v}) is not an edge")
        neg[u] |= 1 << v
        neg[v] |= 1 << u
    return SignedGraph(g.n, g.adj, tuple(neg))


def degrees(g: SignedGraph) -> list[DegreeTriple]:
    return [DegreeTriple(a.bit_count(), (a & ~b).bit_count(), b.bit_count()) for a, b in zip(g.adj, g.neg)]


def regularity(g: SignedGraph) -> tuple[int | None, int | None]:
    """``(r, rho)``: the common degree and net-degree, each None if not constant."""
    ds = degrees(g)
    if not ds:
        return None, None
    r = ds[0].d if all(t.d == ds[0].d for t in ds) else None
    rho = ds[0].net if all(t.net == ds[0].net for t in ds) else None
    return r, rho


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, g.adj, tuple(a & ~b for a, b in zip(g.adj, g.neg)))


def switch(g: SignedGraph, subset: Iterable[int]) -> SignedGraph:
    u_mask = mask_of(subset)
    full = (1 << g.n) - 1
    neg = []
    for v in range(g.n):
        cross = g.adj[v] & (full & ~u_mask if u_mask >> v & 1 else u_mask)
        neg.append(g.neg[v] ^ cross)
    return SignedGraph(g.n, g.adj, tuple(neg))


def underlying(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, g.adj, (0,) * g.n)


def subgraph_pos(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, g.pos, (0,) * g.n)


def subgraph_neg(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, g.neg, (0,) * g.n)


def two_walk_counts(g: SignedGraph, u: int, v: int) -> WalkCounts2:
    """Positive and negative walks of length 2 from ``u`` to ``v``."""
    nu, nv = g.neg[u], g.neg[v]
    pu, pv = g.adj[u] & ~nu, g.adj[v] & ~nv
    pos = (pu & pv).bit_count() + (nu & nv).bit_count()
    neg = (pu & nv).bit_count() + (nu & pv).bit_count()
    return WalkCounts2(pos, neg)


def is_connected(g: SignedGraph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def is_balanced(g: SignedGraph) -> bool:
    """Two-colour the vertices so that negative edges cross the colouring."""
    mark = [0] * g.n
    for root in range(g.n):
        if mark[root]:
            continue
        mark[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in iter_bits(g.adj[u]):
                want = -mark[u] if g.neg[u] >> v & 1 else mark[u]
                if not mark[v]:
                    mark[v] = want
                    queue.append(v)
                elif mark[v] != want:
                    return False
    return True


def unbalanced_triangles(g: SignedGraph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in combinations(range(g.n), 2):
        if not g.adj[u] >> v & 1:
            continue
        for w in iter_bits(g.adj[u] & g.adj[v] & ~((2 << v) - 1)):
            parity = (g.neg[u] >> v & 1) + (g.neg[u] >> w & 1) + (g.neg[v] >> w & 1)
            if parity % 2:
                out.append((u, v, w))
    return out
