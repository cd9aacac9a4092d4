"""Exact point counts, L-polynomials and Diophantine-maximality tests for
curves over small finite fields."""

from .bounds import (
    DefectReport,
    a2_bounds,
    ahl_bound,
    defect_report,
    dm_defect,
    dm_genus_bounds,
    dm_lower_N2,
    dm_upper_N2,
    ihara_bound,
    weil_interval,
)
from .classify import (
    ClassificationVerdict,
    Genus2JacobianClass,
    bridge_a,
    check_covering_consistency,
    classify_counts,
    dm_lpoly,
    genus2_jacobian_classify,
    ihara_equiv_check,
)
from .curves import (
    ArtinSchreierLike,
    CurveEntry,
    Hyperelliptic,
    PointCounts,
    SmoothPlane,
    count_points,
    count_profile,
    load_corpus,
    validate_model,
)
from .errors import DomainError
from .ff import FieldDesc, FieldElement, extend, make_field
from .intpoly import IntPoly, is_q_weil
from .search import corpus_verify, genus2_dm_search, ihara_candidate_scan
from .zeta import AlphaStats, LPolynomial, alpha_stats, jacobian_order, lpoly_from_counts, trace_tau

__version__ = "0.1.0"

__all__ = [
    "AlphaStats",
    "ArtinSchreierLike",
    "ClassificationVerdict",
    "CurveEntry",
    "DefectReport",
    "DomainError",
    "FieldDesc",
    "FieldElement",
    "Genus2JacobianClass",
    "Hyperelliptic",
    "IntPoly",
    "LPolynomial",
    "PointCounts",
    "SmoothPlane",
    "a2_bounds",
    "ahl_bound",
    "alpha_stats",
    "bridge_a",
    "check_covering_consistency",
    "classify_counts",
    "corpus_verify",
    "count_points",
    "count_profile",
    "defect_report",
    "dm_defect",
    "dm_genus_bounds",
    "dm_lower_N2",
    "dm_lpoly",
    "dm_upper_N2",
    "extend",
    "genus2_dm_search",
    "genus2_jacobian_classify",
    "ihara_bound",
    "ihara_candidate_scan",
    "ihara_equiv_check",
    "is_q_weil",
    "jacobian_order",
    "load_corpus",
    "lpoly_from_counts",
    "make_field",
    "trace_tau",
    "validate_model",
    "weil_interval",
]
