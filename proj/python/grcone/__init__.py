"""Exact cone computations for Grassmann bundles over curves."""

from ._core import (
    BundleDescriptor,
    CertificateChecks,
    Cone2D,
    CoverModel,
    EffectivityCertificate,
    HNBlock,
    HNType,
    NSClass,
    OracleReport,
    Ray,
    SplitBundle,
    StrongHNData,
    build_certificate,
    certificate_to_json,
    check_cover_consistency,
    contains,
    dual_split,
    exterior_power_split,
    frobenius_split,
    h0_line_genus0,
    h0_taut_twist,
    hn_of_split,
    lambda_char0,
    lambda_strong,
    max_subset_sum,
    on_boundary,
    parse_certificate,
    pseff_cone,
    pullback_class,
    shift_strong,
    slope,
    verify_certificate,
    verify_theorem_split,
)

__all__ = [
    "BundleDescriptor",
    "CertificateChecks",
    "Cone2D",
    "CoverModel",
    "EffectivityCertificate",
    "HNBlock",
    "HNType",
    "NSClass",
    "OracleReport",
    "Ray",
    "SplitBundle",
    "StrongHNData",
    "build_certificate",
    "certificate_to_json",
    "check_cover_consistency",
    "contains",
    "dual_split",
    "exterior_power_split",
    "frobenius_split",
    "h0_line_genus0",
    "h0_taut_twist",
    "hn_of_split",
    "lambda_char0",
    "lambda_strong",
    "max_subset_sum",
    "on_boundary",
    "parse_certificate",
    "pseff_cone",
    "pullback_class",
    "shift_strong",
    "slope",
    "verify_certificate",
    "verify_theorem_split",
]
