"""Integer feasibility conditions on strongly regular (signed) graph parameters.

All identities with halves are multiplied by 2 so everything stays in exact
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple


def srg_feasible(n: int, r: int, e: int, f: int) -> bool:
    """The counting identity ``r(r-e-1) = (n-r-1)f`` for an SRG(n, r, e, f)."""
    return r * (r - e - 1) == (n - r - 1) * f


def net_constraint_residual(n: int, r: int, rho: int, a: int | None, b: int | None, c: int | None) -> int:
    """``2*LHS - 2*RHS`` of the net-regular constraint; zero iff it holds.

    The constraint is ``rho^2 + (b-a)/2 rho = (a+b)/2 r + c(n-r-1) + r``.  An
    undefined parameter contributes nothing: ``c`` is undefined only when
    ``n = r + 1``, and ``a`` (``b``) only when ``rho = -r`` (``rho = r``), in
    which case its two terms cancel.
    """
    a = a or 0
    b = b or 0
    c = c or 0
    return 2 * rho * rho + (b - a) * rho - (a + b) * r - 2 * c * (n - r - 1) - 2 * r


def prop33_filter(a: int, b: int) -> bool:
    """Necessary (a, b) conditions for a connected non-complete 5-regular,
    1 net-regular SRSG in C1, C4 or C5."""
    return (
        a < 3
        and (a != -1 or b <= 0)
        and (a != -2 or b >= -1)
        and a > -3
        and -2 <= b < 3
        and (b not in (2, -1) or a <= 0)
        and (b != -2 or a >= 1)
    )


class StructuralFilter(NamedTuple):
    r: int
    rho: int
    a: int
    b: int
    keep: Callable[[int], bool]
    reason: str


# Divisibility conditions forced by the shape of the positive or negative
# subgraph for particular (a, b).  Opt-in only.
STRUCTURAL_FILTERS: dict[str, StructuralFilter] = {
    "a3b0-5|n": StructuralFilter(5, 3, 3, 0, lambda n: n % 5 == 0, "positive subgraph is a union of K5"),
    "a2b1-12|n": StructuralFilter(5, 1, 2, 1, lambda n: n % 12 == 0, "G+ = pK4 and G- = qK3"),
    "a2b0-4|n": StructuralFilter(5, 1, 2, 0, lambda n: n % 4 == 0, "positive subgraph is a union of K4"),
    "a0b1-3|n": StructuralFilter(5, 1, 0, 1, lambda n: n % 3 == 0, "negative subgraph is a union of K3"),
}


class Candidate(NamedTuple):
    """A parameter tuple; ``n`` is None for a family valid at every order."""

    n: int | None
    r: int
    a: int
    b: int
    c: int | None

    @property
    def parametric(self) -> bool:
        return self.n is None

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "a": self.a, "b": self.b, "c": self.c, "parametric": self.parametric}


@dataclass(frozen=True)
class ParamQuery:
    r: int
    rho: int
    n_range: tuple[int, int]
    a_range: tuple[int, int] | None = None
    b_range: tuple[int, int] | None = None
    require_noncomplete: bool = False
    structural_filters: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.r < 0 or abs(self.rho) > self.r or (self.r - self.rho) % 2:
            raise ValueError(f"net-degree {self.rho} incompatible with degree {self.r}")
        for name, rng in (("n", self.n_range), ("a", self.a_range), ("b", self.b_range)):
            if rng is not None and rng[0] > rng[1]:
                raise ValueError(f"empty {name} range {rng}")
        unknown = set(self.structural_filters) - set(STRUCTURAL_FILTERS)
        if unknown:
            raise ValueError(f"unknown structural filters {sorted(unknown)}")

    def bounds(self, rng: tuple[int, int] | None) -> range:
        lim = max(self.r - 1, 0)
        lo, hi = rng if rng is not None else (-lim, lim)
        return range(max(lo, -lim), min(hi, lim) + 1)

    def orders(self) -> list[int]:
        lo, hi = self.n_range
        return [n for n in range(max(lo, self.r + 1), hi + 1) if n * self.r % 2 == 0]


def _passes_filters(q: ParamQuery, n: int, a: int, b: int) -> bool:
    for name in q.structural_filters:
        f = STRUCTURAL_FILTERS[name]
        if (f.r, f.rho, f.a, f.b) == (q.r, q.rho, a, b) and not f.keep(n):
            return False
    return True


def _sort_key(c: Candidate):
    return (c.n is None, c.n or 0, c.a, c.b, -(1 << 30) if c.c is None else c.c)


def enumerate_candidates(q: ParamQuery) -> list[Candidate]:
    """Parameter tuples satisfying the net-regular constraint in the query box.

    ``c`` is solved for rather than enumerated.  When the constraint forces
    ``c = 0`` independently of ``n`` the (a, b) pair is reported once as a
    parametric family (``n=None``); :func:`materialize` expands it.  The
    (a, b) filter for degree 5, net-degree 1 applies to non-complete orders.
    """
    r, rho = q.r, q.rho
    out = []
    for a in q.bounds(q.a_range):
        for b in q.bounds(q.b_range):
            num = 2 * rho * rho + (b - a) * rho - (a + b) * r - 2 * r
            noncomplete_ok = not (r == 5 and rho == 1) or prop33_filter(a, b)
            if num == 0 and noncomplete_ok and any(n > r + 1 for n in q.orders()):
                out.append(Candidate(None, r, a, b, 0))
            for n in q.orders():
                if n == r + 1:
                    if not q.require_noncomplete and num == 0:
                        out.append(Candidate(n, r, a, b, None))
                    continue
                if num == 0 or not noncomplete_ok:
                    continue
                den = 2 * (n - r - 1)
                if num % den == 0 and _passes_filters(q, n, a, b):
                    out.append(Candidate(n, r, a, b, num // den))
    return sorted(out, key=_sort_key)


def materialize(cands: Iterable[Candidate], n_range: tuple[int, int]) -> list[Candidate]:
    """Expand parametric families over the non-complete orders in ``n_range``."""
    out = []
    for c in cands:
        if c.n is not None:
            out.append(c)
            continue
        for n in range(max(n_range[0], c.r + 2), n_range[1] + 1):
            if n * c.r % 2 == 0:
                out.append(Candidate(n, c.r, c.a, c.b, 0))
    return sorted(set(out), key=_sort_key)
