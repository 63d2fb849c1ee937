"""Exhaustive generation of r-regular graphs and census ingestion.

Generation completes one vertex at a time.  A partial object is the set of
finished vertices together with every edge touching them; at each level the
partial objects are reduced to one representative per isomorphism class (a
canonical form that also colours finished vertices), so each final graph is
produced exactly once.  Untouched vertices are interchangeable, which keeps
the branching small: a completion only decides how many of them to use.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .canon import canonical_labelling
from .formats import Graph6Error, encode_graph6, parse_graph6
from .graph import SignedGraph, from_masks, is_connected, iter_bits

log = logging.getLogger(__name__)

CENSUS_ENV = "SGSR_CENSUS_DIR"


class ParityError(ValueError):
    pass


class CensusFormatError(ValueError):
    def __init__(self, path, lineno: int, reason: str):
        self.path = path
        self.lineno = lineno
        super().__init__(f"{path}:{lineno}: {reason}")


def _component(adj: list[int], v: int) -> int:
    comp = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        frontier = nxt & ~comp
        comp |= nxt
    return comp


def _completions(adj: tuple[int, ...], done: int, n: int, r: int, connected: bool):
    """Yield ``(adj, done)`` for every way of finishing one chosen vertex."""
    full = (1 << n) - 1
    open_ = [u for u in range(n) if not done >> u & 1]
    # most constrained vertex first; the choice is free as long as it is a
    # function of the representative
    v = max(open_, key=lambda u: (adj[u].bit_count(), -u))
    need = r - adj[v].bit_count()
    touched = [u for u in open_ if u != v and adj[u] and not adj[v] >> u & 1 and adj[u].bit_count() < r]
    fresh = [u for u in open_ if u != v and not adj[u]]
    new_done = done | 1 << v
    rest = full & ~new_done
    for t in range(min(need, len(touched)) + 1):
        f = need - t
        if f > len(fresh):
            continue
        for chosen in combinations(touched, t):
            new = list(adj)
            for u in chosen + tuple(fresh[:f]):
                new[u] |= 1 << v
                new[v] |= 1 << u
            if any(
                r - new[u].bit_count() > (rest & ~new[u] & ~(1 << u)).bit_count()
                for u in iter_bits(rest)
            ):
                continue
            if connected:
                comp = _component(new, v)
                if comp & ~new_done == 0 and comp != full:
                    continue
            yield tuple(new), new_done


def _canonical_partial(adj: tuple[int, ...], done: int, n: int):
    colours = [done >> u & 1 for u in range(n)]
    zeros = (0,) * n
    order, rows = canonical_labelling(n, adj, zeros, colours)
    key = (sum(colours), rows[0::2])
    return key, order


def _relabel_partial(adj: tuple[int, ...], done: int, order: list[int]) -> tuple[tuple[int, ...], int]:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * n
    new_done = 0
    for v in range(n):
        m = 0
        for u in iter_bits(adj[v]):
            m |= 1 << pos[u]
        out[pos[v]] = m
        if done >> v & 1:
            new_done |= 1 << pos[v]
    return tuple(out), new_done


@dataclass
class GenStats:
    level_sizes: list[int] = field(default_factory=list)
    canonical_calls: int = 0


def gen_regular(n: int, r: int, connected: bool = True, stats: GenStats | None = None) -> Iterator[SignedGraph]:
    """All r-regular graphs on n vertices, one per isomorphism class.

    Graphs are all-positive, in canonical labelling, and yielded in
    increasing canonical order.  With ``connected`` (the default) only
    connected graphs are produced.
    """
    if n < 1 or not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got n={n}, r={r}")
    if n * r % 2:
        raise ParityError(f"n*r must be even, got n={n}, r={r}")
    if stats is None:
        stats = GenStats()
    full = (1 << n) - 1
    level = [((0,) * n, 0)]
    for _ in range(n):
        nxt: dict = {}
        for adj, done in level:
            for child, cdone in _completions(adj, done, n, r, connected):
                key, order = _canonical_partial(child, cdone, n)
                stats.canonical_calls += 1
                if key not in nxt:
                    nxt[key] = _relabel_partial(child, cdone, order)
        level = [nxt[k] for k in sorted(nxt)]
        stats.level_sizes.append(len(level))
        if not level:
            return
    for adj, done in level:
        assert done == full
        g = from_masks(adj)
        if connected and not is_connected(g):
            continue
        yield g


def census_path(directory, n: int, r: int) -> Path:
    return Path(directory) / f"reg_n{n}_r{r}.g6"


def default_census_dir() -> Path | None:
    d = os.environ.get(CENSUS_ENV)
    return Path(d) if d else None


@dataclass
class Census:
    graphs: list[SignedGraph]
    skipped: int


def ingest_census(path, n: int, r: int) -> Census:
    """Read graph6 lines, keeping connected r-regular graphs of order n.

    Malformed lines raise :class:`CensusFormatError`; graphs of the wrong
    order or degree, or disconnected ones, are skipped and counted.
    """
    graphs = []
    skipped = 0
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except Graph6Error as exc:
                raise CensusFormatError(path, lineno, str(exc)) from None
            if g.n != n or any(a.bit_count() != r for a in g.adj) or not is_connected(g):
                skipped += 1
                continue
            graphs.append(g)
    if skipped:
        log.warning("%s: skipped %d graphs that are not connected %d-regular on %d vertices", path, skipped, r, n)
    return Census(graphs, skipped)


def write_graph6(graphs, path) -> int:
    count = 0
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")
            count += 1
    return count
