"""The seven connected 5-regular net-regular strongly regular signed graphs.

Five are built from explicit rules.  S8_1 and S10_1 have no such rule here;
they were recovered by :func:`sgsr.search.classify` and are stored as ``.sg``
fixtures under ``sgsr/data`` together with the configuration that produced
them (``scripts/freeze_fixtures.py`` regenerates them).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .canon import canonical_form
from .feasibility import net_constraint_residual
from .formats import parse_sg, write_sg
from .graph import SignedGraph, complete_graph, from_edge_list, is_connected, regularity, with_negative_edges
from .srsg import (
    CheckFailure,
    ClassLabel,
    SrsgParams,
    check_srsg,
    classify_class,
    lemma2_check,
    matrix_identity_residual,
    negation_param_swap,
)

CONSTRUCTED = "constructed"
SEARCH_DERIVED = "search-derived"
SEARCH_DERIVED_NAMES = ("S8_1", "S10_1")


class FixtureMissingError(FileNotFoundError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: SignedGraph
    expected: SrsgParams
    expected_class: ClassLabel
    provenance: str
    rule: str = ""

    def sidecar(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected.to_json(),
            "class": str(self.expected_class),
            "provenance": self.provenance,
            "rule": self.rule,
        }


def g1() -> SignedGraph:
    """K6 with the negative perfect matching 01, 23, 45."""
    return with_negative_edges(complete_graph(6), [(0, 1), (2, 3), (4, 5)])


def g2() -> SignedGraph:
    """K6 whose negative edges form the triangles 012 and 345."""
    return with_negative_edges(complete_graph(6), [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


def k6_negative_hexagon() -> SignedGraph:
    """K6 with negative 6-cycle 0-1-2-3-4-5-0 (the other 2-factor signing)."""
    return with_negative_edges(complete_graph(6), [(i, (i + 1) % 6) for i in range(6)])


def s10_2() -> SignedGraph:
    """K5,5 on parts 0-4 and 5-9 with negative matching i ~ i+5."""
    edges = [(i, j, -1 if j == i + 5 else 1) for i in range(5) for j in range(5, 10)]
    return from_edge_list(10, edges)


def s10_3() -> SignedGraph:
    """Positive K5 on 0-4 and on 5-9, joined by the negative matching i ~ i+5."""
    edges = [(i, j, 1) for blk in (0, 5) for i in range(blk, blk + 5) for j in range(i + 1, blk + 5)]
    edges += [(i, i + 5, -1) for i in range(5)]
    return from_edge_list(10, edges)


def s12_1() -> SignedGraph:
    """Positive K4 on 0-3, 4-7, 8-11; negative triangles {i, i+4, i+8}."""
    edges = [(i, j, 1) for blk in (0, 4, 8) for i in range(blk, blk + 4) for j in range(i + 1, blk + 4)]
    for i in range(4):
        edges += [(i, i + 4, -1), (i, i + 8, -1), (i + 4, i + 8, -1)]
    return from_edge_list(12, edges)


_CONSTRUCTED = [
    ("G1", g1, (6, 5, 0, 4, None), ClassLabel.C3, g1.__doc__),
    ("G2", g2, (6, 5, -4, 4, None), ClassLabel.C1, g2.__doc__),
    ("S10_2", s10_2, (10, 5, 0, 0, 1), ClassLabel.C1, s10_2.__doc__),
    ("S10_3", s10_3, (10, 5, 3, 0, -2), ClassLabel.C5, s10_3.__doc__),
    ("S12_1", s12_1, (12, 5, 2, 1, -2), ClassLabel.C5, s12_1.__doc__),
]

_ORDER = ("G1", "S8_1", "S10_1", "S10_2", "S10_3", "G2", "S12_1")


def fixture_dir() -> Path:
    return Path(str(resources.files("sgsr") / "data"))


def load_fixture(name: str, directory: Path | None = None) -> CatalogEntry:
    directory = Path(directory) if directory is not None else fixture_dir()
    sg, meta = directory / f"{name}.sg", directory / f"{name}.json"
    if not sg.exists() or not meta.exists():
        raise FixtureMissingError(
            f"fixture {name} missing in {directory}; run scripts/freeze_fixtures.py "
            "(it calls classify for r=5, rho=3) to recreate it"
        )
    info = json.loads(meta.read_text())
    e = info["expected"]
    return CatalogEntry(
        name,
        parse_sg(sg.read_text()),
        SrsgParams(e["n"], e["r"], e["a"], e["b"], e["c"]),
        ClassLabel(info["class"]),
        info["provenance"],
        info.get("rule", ""),
    )


def build_catalog(directory: Path | None = None) -> list[CatalogEntry]:
    entries = {
        name: CatalogEntry(name, build(), SrsgParams(*params), label, CONSTRUCTED, " ".join(doc.split()))
        for name, build, params, label, doc in _CONSTRUCTED
    }
    for name in SEARCH_DERIVED_NAMES:
        entries[name] = load_fixture(name, directory)
    return [entries[name] for name in _ORDER]


def export_catalog(entries: list[CatalogEntry], directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for e in entries:
        (directory / f"{e.name}.sg").write_text(write_sg(e.graph))
        (directory / f"{e.name}.json").write_text(json.dumps(e.sidecar(), indent=2) + "\n")
        written.append(directory / f"{e.name}.sg")
    return written


@dataclass
class Verdict:
    name: str
    failures: list[str] = field(default_factory=list)
    witness: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "failures": self.failures,
                "witness": list(self.witness) if self.witness else None}


def verify_entry(e: CatalogEntry) -> Verdict:
    v = Verdict(e.name)
    g = e.graph
    try:
        p = check_srsg(g)
    except CheckFailure as exc:
        v.failures.append(f"check_srsg: {exc}")
        v.witness = exc.pair
        return v
    if p != e.expected:
        v.failures.append(f"parameters {p} differ from expected {e.expected}")
    label = classify_class(p)
    if label != e.expected_class:
        v.failures.append(f"class {label} differs from expected {e.expected_class}")
    if matrix_identity_residual(g, p).any():
        v.failures.append("matrix identity residual is nonzero")
    if not is_connected(g):
        v.failures.append("not connected")
    _, rho = regularity(g)
    if rho is None:
        v.failures.append("not net-regular")
    elif net_constraint_residual(p.n, p.r, rho, p.a, p.b, p.c) != 0:
        v.failures.append("net-regular constraint residual is nonzero")
    if not negation_param_swap(g):
        v.failures.append("negation does not swap a and b")
    if label in (ClassLabel.C1, ClassLabel.C4, ClassLabel.C5) and not g.is_complete() and rho is not None:
        holds, pair = lemma2_check(g)
        if not holds:
            v.failures.append(f"negative 2-walks split unevenly at {pair}")
            v.witness = pair
    return v


def verify_catalog(entries: list[CatalogEntry] | None = None) -> list[Verdict]:
    """Check every entry, then check that search-derived ones are new graphs."""
    if entries is None:
        entries = build_catalog()
    verdicts = [verify_entry(e) for e in entries]
    forms = {e.name: canonical_form(e.graph) for e in entries}
    by_name = {v.name: v for v in verdicts}
    for e in entries:
        if e.provenance != SEARCH_DERIVED:
            continue
        for other in entries:
            if other.name != e.name and forms[other.name] == forms[e.name]:
                by_name[e.name].failures.append(f"isomorphic to {other.name}")
    return verdicts
