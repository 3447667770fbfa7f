"""Curvature, Bach tensors, gradient solitons and Bach flow on
homogeneous product 4-manifolds with diagonal left-invariant metrics."""

from .curvature import CurvatureData, DiagonalMetric, curvature, embed_product
from .geometry import (
    GEOMETRY_TAGS,
    GeometryEntry,
    StructureConstants,
    bracket_table,
    catalog,
    entry,
)
from .bach import (
    CLOSED_FORM_TAGS,
    BachDiagonal,
    bach_closed_form,
    bach_from_curvature,
    bach_ratios,
    bach_tensor,
    beta_factor,
    closed_form_pq,
)
from .solitons import (
    ClassificationEntry,
    GridScanResult,
    PotentialForm,
    SolitonCertificate,
    SolitonFamily,
    classify,
    classify_all,
    grid_scan,
    potential_function,
    ricci_gradient_norm_sq,
    verify_soliton,
)
from .flow import (
    FlowTrajectory,
    ScaleLaw,
    SelfSimilarityResult,
    collapse_time,
    run_flow,
    scale_law,
    self_similarity_check,
    tau,
)
from .report import Table1Result, build_table1, render_text, write_figures

__version__ = "0.1.0"

__all__ = [
    "BachDiagonal",
    "CLOSED_FORM_TAGS",
    "ClassificationEntry",
    "CurvatureData",
    "DiagonalMetric",
    "FlowTrajectory",
    "GEOMETRY_TAGS",
    "GeometryEntry",
    "GridScanResult",
    "PotentialForm",
    "ScaleLaw",
    "SelfSimilarityResult",
    "SolitonCertificate",
    "SolitonFamily",
    "StructureConstants",
    "Table1Result",
    "bach_closed_form",
    "bach_from_curvature",
    "bach_ratios",
    "bach_tensor",
    "beta_factor",
    "bracket_table",
    "build_table1",
    "catalog",
    "classify",
    "classify_all",
    "closed_form_pq",
    "collapse_time",
    "curvature",
    "embed_product",
    "entry",
    "grid_scan",
    "potential_function",
    "render_text",
    "ricci_gradient_norm_sq",
    "run_flow",
    "scale_law",
    "self_similarity_check",
    "tau",
    "verify_soliton",
    "write_figures",
]
