"""
Routers de la CLI
"""
from .reduce import register as register_reduce
from .solve import register as register_solve
from .pipeline import register as register_pipeline
from .oracle import register as register_oracle
from .gap import register as register_gap
from .degreduce import register as register_degreduce
from .verify import register as register_verify

ROUTERS = [
    register_reduce,
    register_solve,
    register_pipeline,
    register_oracle,
    register_gap,
    register_degreduce,
    register_verify
]

__all__ = [
    "ROUTERS",
    "register_reduce",
    "register_solve",
    "register_pipeline",
    "register_oracle",
    "register_gap",
    "register_degreduce",
    "register_verify"
]
