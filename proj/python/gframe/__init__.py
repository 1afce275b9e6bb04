"""Continuous g-frames over finite weighted measure spaces."""

from ._core import (
    DisjointnessReport,
    Error,
    FrameReport,
    GFrameFamily,
    GenerationError,
    NumericError,
    ParseError,
    PreconditionError,
    RieszReport,
    ShapeError,
    SingularOperatorError,
    TolerancePolicy,
    analysis_matrix,
    canonical_dual,
    classify,
    cross_operator,
    delta_family,
    frame_bounds,
    gamma_family,
    is_dual_pair,
    load_document,
    parseval_normalize,
    random_gframe,
    random_strongly_disjoint_parseval_pair,
    riesz_check,
    run_command,
    save_document,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
