"""Verification engine: claims, certificates, exhaustive search, GV baseline."""
from .certify import certify_distance
from .claims import check_claims_punctured, check_claims_rate_half, claims_cover, j_profile, theoretical_bounds
from .ensemble import ensemble_uniformity, run_ensemble
from .gv import gv_report, q_ary_entropy
from .search import ExhaustiveSearch, exact_min_distance, weight_distribution
from .suite import VerificationSuite

__all__ = [
    "ExhaustiveSearch",
    "VerificationSuite",
    "certify_distance",
    "check_claims_punctured",
    "check_claims_rate_half",
    "claims_cover",
    "ensemble_uniformity",
    "exact_min_distance",
    "gv_report",
    "j_profile",
    "q_ary_entropy",
    "run_ensemble",
    "theoretical_bounds",
    "weight_distribution",
]
