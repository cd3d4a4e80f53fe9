"""Parity factors: existence criteria, gadget construction, edge-connectivity checks."""

from .connectivity import CutCertificate, edge_connectivity, has_bridge, is_k_edge_connected
from .criteria import (
    DeficiencyCertificate,
    DegreeSpec,
    ExistenceVerdict,
    corollary_mode,
    eta,
    lovasz_exists,
    min_parity_exists,
    tau,
    theorem4_delta,
    validate_spec,
)
from .factor import (
    GadgetGraph,
    ParityFactor,
    brute_force_factor,
    build_gadget,
    cap_f,
    find_parity_factor,
    verify_factor,
)
from .generators import enumerate_small_graphs, named_graph, random_k_edge_connected, remark1_family
from .graph import Component, Graph, build_graph, parse_graph, read_graph
from .matching import brute_force_matching, has_perfect_matching, max_matching

__all__ = [
    "Component", "CutCertificate", "DeficiencyCertificate", "DegreeSpec", "ExistenceVerdict",
    "GadgetGraph", "Graph", "ParityFactor", "brute_force_factor", "brute_force_matching",
    "build_gadget", "build_graph", "cap_f", "corollary_mode", "edge_connectivity",
    "enumerate_small_graphs", "eta", "find_parity_factor", "has_bridge", "has_perfect_matching",
    "is_k_edge_connected", "lovasz_exists", "max_matching", "min_parity_exists", "named_graph",
    "parse_graph", "random_k_edge_connected", "read_graph", "remark1_family", "tau",
    "theorem4_delta", "validate_spec", "verify_factor",
]
