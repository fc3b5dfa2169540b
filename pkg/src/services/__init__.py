"""
Algoritmos del toolkit
"""
from .oracle import exact_ssve, exact_hsse
from .pipeline import full_pipeline, prepare_rounding
from .reductions import ssve_to_hsse, rollback_set
from .relaxation import build_relaxation, solve_sdp

__all__ = [
    "exact_ssve",
    "exact_hsse",
    "full_pipeline",
    "prepare_rounding",
    "ssve_to_hsse",
    "rollback_set",
    "build_relaxation",
    "solve_sdp",
]
