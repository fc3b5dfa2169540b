"""
Utilidades del toolkit
"""
from .errors import (
    SSVEError,
    InvalidInputError,
    DegenerateInputError,
    OracleScaleError,
    SolverError,
    UsageError
)
from .rng import stream, derive_seed
from .logging_setup import configure_logging

__all__ = [
    "SSVEError",
    "InvalidInputError",
    "DegenerateInputError",
    "OracleScaleError",
    "SolverError",
    "UsageError",
    "stream",
    "derive_seed",
    "configure_logging"
]
