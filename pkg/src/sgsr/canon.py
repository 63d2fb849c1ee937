"""Canonical labelling of signed graphs.

Individualisation-refinement: the initial partition groups vertices by
``(colour, degree, positive degree, negative degree)``, refinement splits a
cell by how many positive and negative neighbours each vertex has in a
splitter cell, and the search branches on the first non-singleton cell.
The certificate is the lexicographically smallest relabelled row sequence
over all leaves.  Automorphisms found at leaves prune sibling branches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import SignedGraph, iter_bits


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Relabelling-invariant key: equal iff sign-preserving isomorphic."""

    n: int
    rows: tuple[int, ...]

    def hex(self) -> str:
        width = (self.n + 3) // 4 or 1
        return f"{self.n}:" + "".join(f"{x:0{width}x}" for x in self.rows)


def _refine(cells: list[list[int]], adj: Sequence[int], neg: Sequence[int]) -> list[list[int]]:
    queue = [sum(1 << v for v in c) for c in cells]
    while queue:
        wm = queue.pop()
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, int], list[int]] = {}
            for v in cell:
                key = ((adj[v] & wm).bit_count(), (neg[v] & wm).bit_count())
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            for key in sorted(groups):
                frag = groups[key]
                out.append(frag)
                queue.append(sum(1 << v for v in frag))
        cells = out
    return cells


def _relabelled_rows(order: Sequence[int], adj: Sequence[int], neg: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        a = 0
        for u in iter_bits(adj[v]):
            a |= 1 << pos[u]
        b = 0
        for u in iter_bits(neg[v]):
            b |= 1 << pos[u]
        rows.append(a)
        rows.append(b)
    return tuple(rows)


def _orbit(seeds: list[int], gens: list[list[int]]) -> set[int]:
    orb = set(seeds)
    stack = list(seeds)
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orb:
                orb.add(y)
                stack.append(y)
    return orb


def canonical_labelling(
    n: int,
    adj: Sequence[int],
    neg: Sequence[int],
    colours: Sequence[int] | None = None,
) -> tuple[list[int], tuple[int, ...]]:
    """Return ``(order, rows)``: ``order[i]`` is the vertex placed at position i.

    ``rows`` interleaves the relabelled adjacency and negative masks.  Vertex
    colours, if given, are preserved by the labelling; the caller must add the
    colour multiset to the key when colourings can differ.
    """
    if colours is None:
        colours = [0] * n
    buckets: dict[tuple, list[int]] = {}
    for v in range(n):
        key = (colours[v], adj[v].bit_count(), neg[v].bit_count())
        buckets.setdefault(key, []).append(v)
    start = [buckets[k] for k in sorted(buckets)]

    best_rows: tuple[int, ...] | None = None
    best_order: list[int] = []
    first_rows: tuple[int, ...] | None = None
    first_order: list[int] = []
    autos: list[list[int]] = []

    def record_auto(a_order: list[int], b_order: list[int]) -> None:
        perm = [0] * n
        for x, y in zip(a_order, b_order):
            perm[x] = y
        if any(perm[v] != v for v in range(n)):
            autos.append(perm)

    def search(cells: list[list[int]], path: list[int]) -> None:
        nonlocal best_rows, best_order, first_rows, first_order
        cells = _refine(cells, adj, neg)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            order = [c[0] for c in cells]
            rows = _relabelled_rows(order, adj, neg)
            if first_rows is None:
                first_rows, first_order = rows, order
                best_rows, best_order = rows, order
                return
            if rows == first_rows:
                record_auto(first_order, order)
            if rows < best_rows:
                best_rows, best_order = rows, order
            elif rows == best_rows and order is not best_order:
                record_auto(best_order, order)
            return
        target = cells[idx]
        tried: list[int] = []
        for v in target:
            if tried:
                gens = [g for g in autos if all(g[p] == p for p in path)]
                if gens and v in _orbit(tried, gens):
                    continue
            tried.append(v)
            rest = [u for u in target if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:], path + [v])

    search(start, [])
    assert best_rows is not None
    return best_order, best_rows


def canonical_form(g: SignedGraph) -> CanonicalForm:
    _, rows = canonical_labelling(g.n, g.adj, g.neg)
    return CanonicalForm(g.n, rows)


def canonical_graph(g: SignedGraph) -> SignedGraph:
    """``g`` relabelled into its canonical order."""
    order, _ = canonical_labelling(g.n, g.adj, g.neg)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def signed_isomorphic(g: SignedGraph, h: SignedGraph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return canonical_form(g) == canonical_form(h)
