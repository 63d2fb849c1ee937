"""Strong regularity of signed graphs.

A signed graph is strongly regular when the squared sign matrix has a
constant diagonal ``r`` and each off-diagonal entry depends only on whether
the pair is a positive edge (``a``), a negative edge (``b``) or a non-edge
(``c``).  Homogeneous complete graphs and edgeless graphs are excluded.

Parameters that cannot be observed (``a`` with no positive edges, ``b`` with
no negative edges, ``c`` on a complete graph) are ``None``.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

import numpy as np

from .graph import SignedGraph, is_connected, negate, regularity


class ClassLabel(str, enum.Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    HOMOGENEOUS = "Homogeneous"

    def __str__(self) -> str:
        return self.value


class FailureKind(str, enum.Enum):
    NOT_REGULAR_DIAGONAL = "NotRegularDiagonal"
    POSITIVE_PAIR_MISMATCH = "PositivePairMismatch"
    NEGATIVE_PAIR_MISMATCH = "NegativePairMismatch"
    NON_ADJACENT_MISMATCH = "NonAdjacentMismatch"
    EXCLUDED = "ExcludedHomogeneousCompleteOrEdgeless"

    def __str__(self) -> str:
        return self.value


_KIND_BY_CLASS = {
    0: FailureKind.POSITIVE_PAIR_MISMATCH,
    1: FailureKind.NEGATIVE_PAIR_MISMATCH,
    2: FailureKind.NON_ADJACENT_MISMATCH,
}


@dataclass(frozen=True)
class SrsgParams:
    n: int
    r: int
    a: int | None
    b: int | None
    c: int | None

    def as_tuple(self) -> tuple:
        return (self.n, self.r, self.a, self.b, self.c)

    def to_json(self) -> dict:
        return asdict(self)

    def negated(self) -> SrsgParams:
        return SrsgParams(self.n, self.r, self.b, self.a, self.c)

    def __str__(self) -> str:
        return "(" + ",".join("null" if x is None else str(x) for x in self.as_tuple()) + ")"


class CheckFailure(Exception):
    """Raised by :func:`check_srsg`; carries the first conflicting pair.

    ``expected`` is the value established by ``reference`` (the first pair of
    the same kind), ``found`` is the value at ``pair``.  For the exclusion
    case both pairs are None.
    """

    def __init__(self, kind: FailureKind, pair=None, expected=None, found=None, reference=None):
        self.kind = kind
        self.pair = pair
        self.expected = expected
        self.found = found
        self.reference = reference
        if pair is None:
            msg = str(kind)
        else:
            msg = f"{kind}: pair {pair} has {found}, pair {reference} has {expected}"
        super().__init__(msg)

    def to_json(self) -> dict:
        return {
            "kind": str(self.kind),
            "pair": list(self.pair) if self.pair is not None else None,
            "expected": self.expected,
            "found": self.found,
            "reference": list(self.reference) if self.reference is not None else None,
        }


class PreconditionError(ValueError):
    pass


def _excluded(g: SignedGraph) -> bool:
    return g.is_edgeless() or (g.is_complete() and g.is_homogeneous())


def check_srsg(g: SignedGraph) -> SrsgParams:
    """Extract ``(n, r, a, b, c)`` or raise :class:`CheckFailure`.

    Entries of the squared sign matrix are computed from neighbour bitsets.
    Pairs are scanned in lexicographic order, so the reported witness is the
    first pair that disagrees with an earlier pair of its kind.
    """
    if _excluded(g):
        raise CheckFailure(FailureKind.EXCLUDED)
    n = g.n
    degs = [a.bit_count() for a in g.adj]
    for v in range(1, n):
        if degs[v] != degs[0]:
            raise CheckFailure(FailureKind.NOT_REGULAR_DIAGONAL, (v, v), degs[0], degs[v], (0, 0))
    pos = g.pos
    values: list[int | None] = [None, None, None]
    refs: list[tuple[int, int] | None] = [None, None, None]
    for u in range(n):
        pu, nu = pos[u], g.neg[u]
        for v in range(u + 1, n):
            pv, nv = pos[v], g.neg[v]
            val = (pu & pv).bit_count() + (nu & nv).bit_count() - (pu & nv).bit_count() - (nu & pv).bit_count()
            kind = 1 if nu >> v & 1 else 0 if pu >> v & 1 else 2
            if values[kind] is None:
                values[kind] = val
                refs[kind] = (u, v)
            elif values[kind] != val:
                raise CheckFailure(_KIND_BY_CLASS[kind], (u, v), values[kind], val, refs[kind])
    return SrsgParams(n, degs[0] if n else 0, *values)


def check_srsg_matrix(g: SignedGraph) -> SrsgParams:
    """Same contract as :func:`check_srsg`, computed by squaring the sign matrix."""
    if _excluded(g):
        raise CheckFailure(FailureKind.EXCLUDED)
    A = np.array(g.matrix(), dtype=np.int64).reshape(g.n, g.n)
    A2 = A @ A
    diag = np.diag(A2)
    for v in range(1, g.n):
        if diag[v] != diag[0]:
            raise CheckFailure(FailureKind.NOT_REGULAR_DIAGONAL, (v, v), int(diag[0]), int(diag[v]), (0, 0))
    values: list[int | None] = [None, None, None]
    refs: list[tuple[int, int] | None] = [None, None, None]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            kind = {1: 0, -1: 1, 0: 2}[int(A[u, v])]
            val = int(A2[u, v])
            if values[kind] is None:
                values[kind] = val
                refs[kind] = (u, v)
            elif values[kind] != val:
                raise CheckFailure(_KIND_BY_CLASS[kind], (u, v), values[kind], val, refs[kind])
    return SrsgParams(g.n, int(diag[0]) if g.n else 0, *values)


def is_srsg(g: SignedGraph) -> bool:
    try:
        check_srsg(g)
    except CheckFailure:
        return False
    return True


def classify_class(p: SrsgParams) -> ClassLabel:
    if p.a is None or p.b is None:
        return ClassLabel.HOMOGENEOUS
    complete = p.c is None
    if p.a == -p.b:
        return ClassLabel.C1 if complete or p.c != 0 else ClassLabel.C2
    if complete or 2 * p.c == p.a + p.b:
        return ClassLabel.C3
    if p.c == 0:
        return ClassLabel.C4
    return ClassLabel.C5


def matrix_identity_residual(g: SignedGraph, p: SrsgParams) -> np.ndarray:
    """``2A^2 + (b-a)A - (a+b-2c)A_G - 2cJ - 2(r-c)I`` as an integer matrix.

    It vanishes exactly when ``g`` is strongly regular with parameters ``p``.
    Unobservable parameters do not enter the identity and are taken as 0.
    """
    a = p.a or 0
    b = p.b or 0
    c = p.c or 0
    n = g.n
    A = np.array(g.matrix(), dtype=np.int64).reshape(n, n)
    AG = np.abs(A)
    J = np.ones((n, n), dtype=np.int64)
    I = np.eye(n, dtype=np.int64)
    return 2 * (A @ A) + (b - a) * A - (a + b - 2 * c) * AG - 2 * c * J - 2 * (p.r - c) * I


def negative_walk_split(g: SignedGraph) -> tuple[bool, tuple[int, int] | None]:
    """For every pair ``u < v``, the common neighbours joined to ``u``
    positively and to ``v`` negatively are as many as those joined the other
    way round.  No preconditions; returns ``(holds, first_violating_pair)``.
    """
    pos = g.pos
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (pos[u] & g.neg[v]).bit_count() != (g.neg[u] & pos[v]).bit_count():
                return False, (u, v)
    return True, None


def lemma2_check(g: SignedGraph) -> tuple[bool, tuple[int, int] | None]:
    """:func:`negative_walk_split` restricted to graphs where it must hold.

    The even split (hence an even negative 2-walk count for every pair) is
    guaranteed for connected, non-complete, net-regular strongly regular
    signed graphs in classes C1, C4 or C5; anything else raises
    PreconditionError.
    """
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if g.is_complete():
        raise PreconditionError("graph is complete")
    if regularity(g)[1] is None:
        raise PreconditionError("graph is not net-regular")
    try:
        label = classify_class(check_srsg(g))
    except CheckFailure as exc:
        raise PreconditionError(f"not strongly regular ({exc.kind})") from None
    if label not in (ClassLabel.C1, ClassLabel.C4, ClassLabel.C5):
        raise PreconditionError(f"class {label} is outside C1, C4, C5")
    return negative_walk_split(g)


def negation_param_swap(g: SignedGraph) -> bool:
    p = check_srsg(g)
    try:
        q = check_srsg(negate(g))
    except CheckFailure:
        return False
    return q == p.negated() and classify_class(q) == classify_class(p)


def spectrum(g: SignedGraph) -> list[float]:
    """Eigenvalues of the sign matrix in ascending order (numeric)."""
    if g.n == 0:
        return []
    A = np.array(g.matrix(), dtype=float)
    return [float(x) for x in np.linalg.eigvalsh(A)]

