"""Strongly regular signed graphs: verification, parameter feasibility, exhaustive search."""

from .canon import CanonicalForm, canonical_form, signed_isomorphic
from .catalog import CatalogEntry, build_catalog, verify_catalog
from .feasibility import Candidate, ParamQuery, enumerate_candidates, net_constraint_residual, prop33_filter, srg_feasible
from .formats import encode_graph6, parse_graph6, parse_sg, read_sg, write_sg
from .generate import gen_regular, ingest_census
from .graph import SignedGraph, from_edge_list, negate, regularity, switch
from .search import BudgetExceeded, SearchReport, classify, classify_range, enumerate_negative_subgraphs, negative_regularity
from .srsg import (
    CheckFailure,
    ClassLabel,
    FailureKind,
    SrsgParams,
    check_srsg,
    classify_class,
    lemma2_check,
    negation_param_swap,
    spectrum,
)

__all__ = [
    "CanonicalForm", "Candidate", "CatalogEntry", "CheckFailure", "ClassLabel", "FailureKind", "ParamQuery",
    "SearchReport", "SignedGraph", "SrsgParams", "BudgetExceeded", "build_catalog", "canonical_form",
    "check_srsg", "classify", "classify_class", "classify_range", "encode_graph6", "enumerate_candidates",
    "enumerate_negative_subgraphs", "from_edge_list", "gen_regular", "ingest_census", "lemma2_check",
    "negate", "negation_param_swap", "negative_regularity", "net_constraint_residual", "parse_graph6",
    "parse_sg", "prop33_filter", "read_sg", "regularity", "signed_isomorphic", "spectrum", "srg_feasible",
    "switch", "verify_catalog", "write_sg",
]
