"""Exhaustive search for net-regular strongly regular signed graphs.

Two pipelines:

* ``classify(..., constrained=False)`` runs over every connected r-regular
  underlying graph (generated or read from a census) and over every way of
  placing a k-regular negative subgraph, k = (r - rho)/2.  Signs are decided
  vertex by vertex; once two vertices have all their edges signed their
  entry of A^2 is final and must agree with every earlier pair of the same
  kind, which prunes most branches.
* ``classify(..., constrained=True)`` grows the signed graph itself vertex by
  vertex for fixed target parameters (a, b, c), without enumerating
  underlying graphs.  Untouched vertices are interchangeable, so new
  neighbours are always taken from the lowest untouched labels.

Survivors are deduplicated by sign-preserving isomorphism and returned in
canonical labelling, sorted by canonical form.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .canon import CanonicalForm, canonical_form, canonical_graph
from .feasibility import Candidate, ParamQuery, enumerate_candidates, materialize
from .generate import ParityError, census_path, default_census_dir, gen_regular, ingest_census
from .graph import SignedGraph, iter_bits, is_connected, regularity
from .srsg import CheckFailure, ClassLabel, SrsgParams, check_srsg, classify_class

log = logging.getLogger(__name__)


def negative_regularity(r: int, rho: int) -> int:
    """Negative degree of every vertex of an r-regular, rho net-regular graph."""
    if abs(rho) > r or (r - rho) % 2:
        raise ParityError(f"net-degree {rho} impossible at degree {r}")
    return (r - rho) // 2


class BudgetExceeded(RuntimeError):
    def __init__(self, report: SearchReport):
        self.report = report
        super().__init__(f"search budget exhausted at n={report.n}")


@dataclass
class Budget:
    max_nodes: int | None = None
    max_seconds: float | None = None
    nodes: int = 0
    started: float = field(default_factory=time.monotonic)

    def charge(self, nodes: int) -> bool:
        """Add ``nodes``; True while the budget still holds."""
        self.nodes += nodes
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            return False
        if self.max_seconds is not None and time.monotonic() - self.started > self.max_seconds:
            return False
        return True


class _Stop(Exception):
    pass


@dataclass
class _Counter:
    nodes: int = 0
    leaves: int = 0
    budget: Budget | None = None
    charged: int = 0

    def __post_init__(self) -> None:
        # check often enough that a small node budget is honoured closely
        cap = self.budget.max_nodes if self.budget is not None else None
        self.stride = 4096 if cap is None else max(1, min(4096, cap // 8))

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes - self.charged >= self.stride:
            self.settle()
            if not self.budget.charge(0):
                raise _Stop

    def settle(self) -> None:
        if self.budget is not None:
            self.budget.charge(self.nodes - self.charged)
            self.charged = self.nodes


def _bfs_order(adj: Sequence[int]) -> list[int]:
    n = len(adj)
    order: list[int] = []
    seen = 0
    for root in range(n):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        order.append(root)
        i = len(order) - 1
        while i < len(order):
            fresh = adj[order[i]] & ~seen
            order.extend(iter_bits(fresh))
            seen |= fresh
            i += 1
    return order


def _relabel_masks(masks: Sequence[int], perm: Sequence[int]) -> list[int]:
    out = [0] * len(masks)
    for v, m in enumerate(masks):
        x = 0
        for u in iter_bits(m):
            x |= 1 << perm[u]
        out[perm[v]] = x
    return out


def k_factors(adj: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """Every spanning k-regular subgraph of the graph, as bitset rows."""
    n = len(adj)
    sub = [0] * n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(sub)
            return
        need = k - sub[i].bit_count()
        later = [j for j in iter_bits(adj[i] >> (i + 1) << (i + 1)) if sub[j].bit_count() < k]
        if need < 0 or need > len(later):
            return
        for chosen in combinations(later, need):
            for j in chosen:
                sub[i] |= 1 << j
                sub[j] |= 1 << i
            yield from rec(i + 1)
            for j in chosen:
                sub[i] &= ~(1 << j)
                sub[j] &= ~(1 << i)

    yield from rec(0)


def enumerate_negative_subgraphs(g: SignedGraph, k: int) -> list[SignedGraph]:
    """k-regular spanning subgraphs of ``g``, one per orbit of Aut(g).

    Two subgraphs are in the same orbit exactly when the signings they
    induce (negative on the subgraph) are isomorphic as signed graphs, so
    orbits are separated by canonical form.  Sorted by that form.
    """
    if g.n * k % 2 or any(a.bit_count() < k for a in g.adj):
        return []
    reps: dict[CanonicalForm, SignedGraph] = {}
    for sub in k_factors(g.adj, k):
        form = canonical_form(SignedGraph(g.n, g.adj, sub))
        if form not in reps:
            reps[form] = SignedGraph(g.n, sub, (0,) * g.n)
    return [reps[f] for f in sorted(reps)]


def signing_by_subgraph(g: SignedGraph, sub: SignedGraph) -> SignedGraph:
    """``g``'s underlying graph, negative exactly on the edges of ``sub``."""
    return SignedGraph(g.n, g.adj, sub.adj)


def _pair_kind(pi: int, ni: int, j: int) -> int:
    return 1 if ni >> j & 1 else 0 if pi >> j & 1 else 2


def srsg_signings(
    g: SignedGraph,
    k: int,
    target: tuple[int | None, int | None, int | None] | None = None,
    counter: _Counter | None = None,
) -> Iterator[SignedGraph]:
    """Strongly regular signings of ``g`` with negative degree ``k`` everywhere.

    Without ``target`` the values a, b, c are fixed by the first finished pair
    of each kind; with it they are prescribed (None forbids that kind).
    Yields labelled signings; isomorphic ones may repeat.
    """
    if counter is None:
        counter = _Counter()
    n = g.n
    order = _bfs_order(g.adj)
    perm = [0] * n
    for i, v in enumerate(order):
        perm[v] = i
    A = _relabel_masks(g.adj, perm)
    neg = [0] * n
    fixed = target is not None
    values: list[int | None] = list(target) if fixed else [None, None, None]

    def rec(i: int) -> Iterator[list[int]]:
        counter.tick()
        if i == n:
            counter.leaves += 1
            yield neg
            return
        need = k - neg[i].bit_count()
        later = [j for j in iter_bits(A[i] >> (i + 1) << (i + 1)) if neg[j].bit_count() < k]
        if need < 0 or need > len(later):
            return
        for chosen in combinations(later, need):
            for j in chosen:
                neg[i] |= 1 << j
                neg[j] |= 1 << i
            saved = values[:]
            ni = neg[i]
            pi = A[i] & ~ni
            ok = True
            for j in range(i):
                nj = neg[j]
                pj = A[j] & ~nj
                val = (pi & pj).bit_count() + (ni & nj).bit_count() - (pi & nj).bit_count() - (ni & pj).bit_count()
                kind = _pair_kind(pi, ni, j)
                if values[kind] is None and not fixed:
                    values[kind] = val
                elif values[kind] != val:
                    ok = False
                    break
            if ok:
                yield from rec(i + 1)
            values[:] = saved
            for j in chosen:
                neg[i] &= ~(1 << j)
                neg[j] &= ~(1 << i)

    for negs in rec(0):
        yield SignedGraph(n, g.adj, tuple(_relabel_masks(negs, order)))


def build_constrained(
    n: int,
    r: int,
    rho: int,
    target: tuple[int | None, int | None, int | None],
    counter: _Counter | None = None,
) -> Iterator[SignedGraph]:
    """Connected r-regular, rho net-regular signed graphs with A^2 values ``target``.

    ``target = (a, b, c)``; ``c=None`` asks for a complete graph.  Vertices
    are finished in breadth-first order, so each graph is reached in at
    least one labelling; outputs may repeat up to isomorphism.
    """
    if counter is None:
        counter = _Counter()
    k = negative_regularity(r, rho)
    adj = [0] * n
    neg = [0] * n

    def feasible_pairs(i: int) -> bool:
        ni = neg[i]
        pi = adj[i] & ~ni
        later_nbrs = adj[i] >> (i + 1) << (i + 1)
        for j in range(n):
            if j == i:
                continue
            nj = neg[j]
            pj = adj[j] & ~nj
            val = (pi & pj).bit_count() + (ni & nj).bit_count() - (pi & nj).bit_count() - (ni & pj).bit_count()
            t = target[_pair_kind(pi, ni, j)]
            if t is None:
                return False
            if j < i:
                if val != t:
                    return False
            else:
                # only unfinished neighbours of i can still become common neighbours
                slack = min((later_nbrs & ~adj[j] & ~(1 << j)).bit_count(), r - adj[j].bit_count())
                if abs(t - val) > slack:
                    return False
        return True

    def rec(i: int) -> Iterator[None]:
        counter.tick()
        if i == n:
            counter.leaves += 1
            yield
            return
        if i and not adj[i]:
            return
        need = r - adj[i].bit_count()
        nneed = k - neg[i].bit_count()
        if nneed < 0 or nneed > need:
            return
        touched = [j for j in range(i + 1, n) if adj[j] and not adj[i] >> j & 1 and adj[j].bit_count() < r]
        fresh = [j for j in range(i + 1, n) if not adj[j]]
        for t in range(min(need, len(touched)) + 1):
            f = need - t
            if f > len(fresh):
                continue
            for chosen in combinations(touched, t):
                for tn in range(min(nneed, t) + 1):
                    fn = nneed - tn
                    if fn > f:
                        continue
                    for chosen_neg in combinations(chosen, tn):
                        negs = list(chosen_neg) + fresh[:fn]
                        poss = [j for j in chosen if j not in chosen_neg] + fresh[fn:f]
                        if any(neg[j].bit_count() >= k for j in negs):
                            continue
                        if any((adj[j] & ~neg[j]).bit_count() >= r - k for j in poss):
                            continue
                        for j in negs + poss:
                            adj[i] |= 1 << j
                            adj[j] |= 1 << i
                        for j in negs:
                            neg[i] |= 1 << j
                            neg[j] |= 1 << i
                        if feasible_pairs(i):
                            yield from rec(i + 1)
                        for j in negs + poss:
                            adj[i] &= ~(1 << j)
                            adj[j] &= ~(1 << i)
                        for j in negs:
                            neg[i] &= ~(1 << j)
                            neg[j] &= ~(1 << i)

    if n < 1 or r >= n:
        return
    for _ in rec(0):
        yield SignedGraph(n, tuple(adj), tuple(neg))


@dataclass(frozen=True)
class Survivor:
    graph: SignedGraph
    params: SrsgParams
    label: ClassLabel
    form: CanonicalForm

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "class": str(self.label),
            "canonical": self.form.hex(),
            "edges": [list(e) for e in self.graph.edges()],
        }


@dataclass
class SearchReport:
    n: int
    r: int
    rho: int
    source: str
    mode: str
    underlying_count: int | None = None
    signing_count: int = 0
    nodes: int = 0
    targets: list[Candidate] = field(default_factory=list)
    survivors: list[Survivor] = field(default_factory=list)
    complete: bool = True
    elapsed: float = 0.0

    def to_json(self) -> dict:
        """Deterministic fields only; wall time is left out on purpose."""
        return {
            "n": self.n,
            "r": self.r,
            "rho": self.rho,
            "source": self.source,
            "mode": self.mode,
            "complete": self.complete,
            "underlying_count": self.underlying_count,
            "signing_count": self.signing_count,
            "nodes": self.nodes,
            "targets": [t.to_json() for t in self.targets],
            "survivors": [s.to_json() for s in self.survivors],
        }


def _survivor(g: SignedGraph, r: int, rho: int) -> Survivor:
    canon = canonical_graph(g)
    params = check_srsg(canon)
    if not is_connected(canon) or regularity(canon) != (r, rho):
        raise AssertionError(f"search produced an invalid graph {canon.edges()}")
    return Survivor(canon, params, classify_class(params), canonical_form(canon))


def _merge(found: dict[CanonicalForm, Survivor], graphs: Iterable[SignedGraph], r: int, rho: int) -> None:
    for g in graphs:
        # pair-by-pair pruning cannot see the exclusion of one-sign complete graphs
        if g.is_complete() and g.is_homogeneous():
            continue
        s = _survivor(g, r, rho)
        found.setdefault(s.form, s)


def _underlying_graphs(n: int, r: int, source: str, census_dir) -> list[SignedGraph]:
    if source == "generated":
        return list(gen_regular(n, r))
    if source == "census":
        directory = census_dir or default_census_dir()
        if directory is None:
            raise FileNotFoundError("no census directory given and SGSR_CENSUS_DIR is unset")
        return ingest_census(census_path(directory, n, r), n, r).graphs
    raise ValueError(f"unknown source {source!r}")


def _signings_for(args) -> tuple[list[SignedGraph], int, int, bool]:
    """Worker entry point: all SRSG signings of one underlying graph."""
    g, k, method, deadline = args
    budget = Budget(max_seconds=deadline - time.monotonic()) if deadline is not None else None
    counter = _Counter(budget=budget)
    out: list[SignedGraph] = []
    try:
        if method == "pruned":
            out = list(srsg_signings(g, k, counter=counter))
        else:
            for sub in enumerate_negative_subgraphs(g, k):
                counter.tick()
                counter.leaves += 1
                sg = signing_by_subgraph(g, sub)
                try:
                    check_srsg(sg)
                except CheckFailure:
                    continue
                out.append(sg)
    except _Stop:
        return out, counter.nodes, counter.leaves, False
    return out, counter.nodes, counter.leaves, True


def constrained_targets(n: int, r: int, rho: int, structural_filters: Iterable[str] = ()) -> list[Candidate]:
    q = ParamQuery(r, rho, (n, n), structural_filters=frozenset(structural_filters))
    return [c for c in materialize(enumerate_candidates(q), (n, n)) if c.n == n]


def classify(
    n: int,
    r: int,
    rho: int,
    *,
    source: str = "generated",
    constrained: bool = False,
    targets: Sequence[tuple[int | None, int | None, int | None]] | None = None,
    structural_filters: Iterable[str] = (),
    method: str = "pruned",
    census_dir=None,
    jobs: int = 1,
    budget: Budget | None = None,
    graphs: Sequence[SignedGraph] | None = None,
) -> SearchReport:
    """All connected r-regular, rho net-regular SRSGs of order n, up to isomorphism.

    ``method`` selects the unconstrained pipeline: ``"pruned"`` (incremental
    signing with pair checks) or ``"orbits"`` (one negative subgraph per
    automorphism orbit, each signing checked in full).  ``graphs`` overrides
    the underlying-graph source.  Raises :class:`BudgetExceeded` with a
    partial report when ``budget`` runs out.
    """
    k = negative_regularity(r, rho)
    t0 = time.monotonic()
    mode = "constrained" if constrained else "full"
    report = SearchReport(n, r, rho, "none" if constrained else ("given" if graphs is not None else source), mode)
    found: dict[CanonicalForm, Survivor] = {}

    def finish(complete: bool) -> SearchReport:
        report.survivors = [found[f] for f in sorted(found)]
        report.complete = complete
        report.elapsed = time.monotonic() - t0
        return report

    if constrained:
        if targets is None:
            cands = constrained_targets(n, r, rho, structural_filters)
        else:
            cands = [Candidate(n, r, a, b, c) for a, b, c in targets]
        report.targets = cands
        counter = _Counter(budget=budget)
        try:
            for cand in cands:
                _merge(found, build_constrained(n, r, rho, (cand.a, cand.b, cand.c), counter), r, rho)
        except _Stop:
            report.nodes, report.signing_count = counter.nodes, counter.leaves
            raise BudgetExceeded(finish(False)) from None
        counter.settle()
        report.nodes, report.signing_count = counter.nodes, counter.leaves
        return finish(True)

    if r >= n or n * r % 2:
        report.underlying_count = 0
        return finish(True)
    under = list(graphs) if graphs is not None else _underlying_graphs(n, r, source, census_dir)
    report.underlying_count = len(under)
    deadline = None
    if budget is not None and budget.max_seconds is not None:
        deadline = budget.started + budget.max_seconds
    work = [(g, k, method, deadline) for g in under]
    if jobs > 1 and len(work) > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.imap(_signings_for, work, chunksize=max(1, len(work) // (8 * jobs)))
            _collect(results, report, found, budget, r, rho, finish)
    else:
        _collect(map(_signings_for, work), report, found, budget, r, rho, finish)
    return finish(True)


def _collect(results, report, found, budget, r, rho, finish) -> None:
    for graphs, nodes, leaves, done in results:
        report.nodes += nodes
        report.signing_count += leaves
        _merge(found, graphs, r, rho)
        within = budget.charge(nodes) if budget is not None else True
        if not done or not within:
            raise BudgetExceeded(finish(False))


@dataclass
class Classification:
    r: int
    rho: int
    reports: list[SearchReport]
    notes: list[str]

    @property
    def survivors(self) -> list[Survivor]:
        return [s for rep in self.reports for s in rep.survivors]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "rho": self.rho,
            "orders": [rep.n for rep in self.reports],
            "survivor_count": len(self.survivors),
            "reports": [rep.to_json() for rep in self.reports],
            "notes": self.notes,
        }


def parametric_notes(r: int, rho: int, nmax: int) -> list[str]:
    """Flags for c = 0 families that a bounded search cannot settle."""
    q = ParamQuery(r, rho, (r + 1, max(nmax, r + 2)))
    notes = []
    for c in enumerate_candidates(q):
        if c.parametric:
            notes.append(
                f"parametric family (n,{r},{c.a},{c.b},0): verified up to n={nmax} only; "
                "larger orders rely on a structural argument outside this search"
            )
    return notes


def classify_range(
    r: int,
    rho: int,
    nmax: int,
    nmin: int | None = None,
    progress=None,
    **kwargs,
) -> Classification:
    """Run :func:`classify` for every admissible order in ``[nmin, nmax]``."""
    lo = r + 1 if nmin is None else max(nmin, r + 1)
    reports = []
    for n in range(lo, nmax + 1):
        if n * r % 2:
            continue
        rep = classify(n, r, rho, **kwargs)
        if progress is not None:
            progress(rep)
        reports.append(rep)
    return Classification(r, rho, reports, parametric_notes(r, rho, nmax))


def survivor_forms(reports: Iterable[SearchReport]) -> set[CanonicalForm]:
    return {s.form for rep in reports for s in rep.survivors}

