"""Maximum k-edge-colourable subgraphs of cubic and subcubic multigraphs, with certificates."""

from .certify import (
    Certificate,
    InequalityReport,
    TripleConstruction,
    certify_cubic,
    pair_to_triple,
    verify_all,
)
from .exact import (
    alpha_k,
    chromatic_index,
    matching_number,
    max_disjoint_maximum_matchings,
    maximum_matching,
    nu_k,
)
from .fileio import dumps, parse, read_graph, write_graph
from .generate import enumerate_cubic, enumerate_cubic_pseudographs, random_cubic, random_subcubic
from .graph import GraphError, Matching, MatchingFamily, Multigraph, subdivide_edge
from .harness import search_tight
from .pseudograph import (
    certify_matching,
    certify_pair,
    cut_loop,
    derive_k_after_cut,
    in_class_M,
    realize,
    to_cubic_pseudograph,
)
from .separated import separated_maximum_matching
from .systems import build_system, lift_system, nu2_subdivision_value, transform_pair_through_subdivision

__all__ = [
    "Certificate",
    "GraphError",
    "InequalityReport",
    "Matching",
    "MatchingFamily",
    "Multigraph",
    "TripleConstruction",
    "alpha_k",
    "build_system",
    "certify_cubic",
    "certify_matching",
    "certify_pair",
    "chromatic_index",
    "cut_loop",
    "derive_k_after_cut",
    "dumps",
    "enumerate_cubic",
    "enumerate_cubic_pseudographs",
    "in_class_M",
    "lift_system",
    "matching_number",
    "max_disjoint_maximum_matchings",
    "maximum_matching",
    "nu2_subdivision_value",
    "nu_k",
    "pair_to_triple",
    "parse",
    "random_cubic",
    "random_subcubic",
    "read_graph",
    "realize",
    "search_tight",
    "separated_maximum_matching",
    "subdivide_edge",
    "to_cubic_pseudograph",
    "transform_pair_through_subdivision",
    "verify_all",
    "write_graph",
]
