"""Generalized Cesaro operators on Dirichlet-type spaces."""

import json

from ._core import (
    DomainError,
    Measure,
    ParseError,
    SemanticError,
    apply,
    beta,
    carleson_exponent,
    classify_carleson,
    classify_moments,
    est_ratio,
    log_gamma,
    norm_growth_profile,
    prop1_bound_check,
    section_norm,
)
from ._core import equivalence_report_json as _equivalence_report_json

__all__ = [
    "DomainError",
    "Measure",
    "ParseError",
    "SemanticError",
    "apply",
    "beta",
    "carleson_exponent",
    "check_equivalence",
    "classify_carleson",
    "classify_moments",
    "est_ratio",
    "log_gamma",
    "norm_growth_profile",
    "prop1_bound_check",
    "section_norm",
]


def check_equivalence(measure, alpha, beta, name=None):
    """Runs every verdict engine on one measure and returns the report entry as a dict."""
    if isinstance(measure, str):
        name = name or measure
        measure = Measure(measure)
    doc = json.loads(_equivalence_report_json(name or str(measure), measure, alpha, beta))
    return doc["entries"][0]
