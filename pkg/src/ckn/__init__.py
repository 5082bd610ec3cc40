"""Exact classifier and numerical verification harness for weighted
Sobolev embeddings and generalized CKN inequalities on the punctured space."""

from .admissible import AdmissibleSet, Interval, ThetaSet, ThetaSetKind, admissible_set, theta_set
from .classify import (
    Case,
    Decision,
    Reason,
    Verdict,
    W0Result,
    auto_theta_condition_check,
    classify,
    classify_radial,
    classify_w0,
)
from .derived import DerivedQuantities, derive
from .multiweight import MultiWeightSpec, SiteWeights, multiweight_classify
from .params import Params, kelvin_params
from .rational import INF, format_rational, holder_conjugate, parse_rational

__all__ = [
    "AdmissibleSet",
    "Case",
    "Decision",
    "DerivedQuantities",
    "INF",
    "Interval",
    "MultiWeightSpec",
    "Params",
    "Reason",
    "SiteWeights",
    "ThetaSet",
    "ThetaSetKind",
    "Verdict",
    "W0Result",
    "admissible_set",
    "auto_theta_condition_check",
    "classify",
    "classify_radial",
    "classify_w0",
    "derive",
    "format_rational",
    "holder_conjugate",
    "kelvin_params",
    "multiweight_classify",
    "parse_rational",
    "theta_set",
]

__version__ = "0.1.0"
