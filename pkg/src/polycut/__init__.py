"""Minimum edge cuts of simplicial polytopes: constructions, cut machinery and verification."""

from .complex import (
    Graph,
    SimplicialComplex,
    ValidationReport,
    format_facet_list,
    link,
    min_degree,
    parse_facet_list,
    read_facet_list,
    skeleton_graph,
    validate,
    write_facet_list,
)
from .constructions import (
    LabeledConstruction,
    boundary_simplex,
    connected_sum,
    cyclic_boundary,
    edge_flip,
    nontrivial_cut_polytope,
    random_connected_sum_sphere,
    random_plane_triangulation,
    stacked_chain,
)
from .cuts import (
    CutClassification,
    EdgeCut,
    brute_force_min_cuts,
    classify,
    find_nontrivial_min_cut,
    global_min_cut,
    min_cut_between,
    vertex_connectivity_at_least,
)
from .errors import (
    FacetListFormatError,
    FlipIllegalError,
    InvalidComplexError,
    InvalidInputError,
    NotFoundError,
    OracleScaleExceeded,
    PolycutError,
)
from .verifier import CampaignConfig, CampaignSummary, VerificationReport, analyze, campaign, verify_links

__version__ = "0.1.0"
