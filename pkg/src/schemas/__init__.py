"""
Schemas Pydantic para archivos y reportes
"""
from .instance import (
    HypergraphVertex,
    HypergraphEdge,
    HypergraphFile,
    VectorFile
)
from .pipeline import PipelineConfig
from .report import (
    ConditioningStep,
    ConditioningTrace,
    DeletedEdge,
    DeletionSummary,
    TrialRecord,
    ChosenSet,
    EdgeAudit,
    PreprocessCheck,
    RunReport,
    SolveReport,
    OracleReport,
    InstanceReport,
    VerifyReport,
    ErrorReport
)

__all__ = [
    # Instancias
    "HypergraphVertex",
    "HypergraphEdge",
    "HypergraphFile",
    "VectorFile",
    # Configuración
    "PipelineConfig",
    # Reportes
    "ConditioningStep",
    "ConditioningTrace",
    "DeletedEdge",
    "DeletionSummary",
    "TrialRecord",
    "ChosenSet",
    "EdgeAudit",
    "PreprocessCheck",
    "RunReport",
    "SolveReport",
    "OracleReport",
    "InstanceReport",
    "VerifyReport",
    "ErrorReport",
]
