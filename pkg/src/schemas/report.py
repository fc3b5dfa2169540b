"""
Schemas de reportes (RunReport y reportes de los subcomandos)

Los reportes no llevan marcas de tiempo: misma entrada, mismas banderas y
misma semilla producen el mismo JSON byte a byte.
"""
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field

from .pipeline import PipelineConfig


class ConditioningStep(BaseModel):
    """Un paso de condicionamiento x_v = value"""
    vertex: int
    value: int = Field(..., ge=0, le=1)
    probability: float = Field(..., description="Pr̃[x_v = value] antes de condicionar")
    mode: Literal["exact", "pinned"]
    forced: bool = Field(False, description="Se usó el bit opuesto al muestreado")


class ConditioningTrace(BaseModel):
    """Traza de la ronda de condicionamiento"""
    subset_size: int = 0
    steps: List[ConditioningStep] = Field(default_factory=list)
    mutual_information_before: float = 0.0
    mutual_information_after: float = 0.0
    conditioned_sdp_value: Optional[float] = Field(None, description="Valor del último SDP con etiquetas fijadas")


class DeletedEdge(BaseModel):
    """Hiperarista eliminada por Δ_e ≥ 1/10"""
    edge: int
    weight: float
    delta_e: float


class DeletionSummary(BaseModel):
    deleted_edges: List[DeletedEdge] = Field(default_factory=list)
    deleted_weight: float = 0.0
    weighted_delta_sum: float = Field(0.0, description="Σ_e w(e)·Δ_e")
    accounting_holds: bool = Field(True, description="peso eliminado ≤ 10·Σ_e w(e)Δ_e")


class TrialRecord(BaseModel):
    """Resultado de un ensayo de redondeo"""
    index: int
    seed: int = Field(..., description="Semilla raíz de la corrida")
    stream: str = Field("rounding", description="Flujo del que sale la gaussiana del ensayo")
    derived_seed: int = Field(..., description="derive_seed(seed, stream, index)")
    size: int
    relative_weight: float
    expansion: Optional[float] = Field(None, description="φE_H del conjunto redondeado")
    valid: bool
    in_theorem_window: bool


class ChosenSet(BaseModel):
    """Conjunto final S′"""
    trial: int
    members: List[int]
    size: int
    target_size: int
    hypergraph_expansion: float
    phi_v: Optional[float] = None
    convention: Literal["size", "min"] = "size"
    rollback_bounds_hold: Optional[bool] = None


class EdgeAudit(BaseModel):
    """Frecuencia de corte por hiperarista frente a la cota calibrada"""
    edge: int
    nu: float
    alpha: float
    nice: bool
    cut_frequency: float
    bound: float
    within_bound: bool


class PreprocessCheck(BaseModel):
    """Máxima holgura de cada propiedad del desplazamiento (negativa = se cumple)"""
    name: str
    worst: float
    holds: bool


class RunReport(BaseModel):
    """Reporte completo de una corrida del pipeline"""
    kind: Literal["pipeline"] = "pipeline"
    instance_hash: str
    config: PipelineConfig
    n_source: Optional[int] = None
    n_hypergraph: int
    m_hypergraph: int
    sdp_value: float
    sdp_diagnostics: Dict[str, Any] = Field(default_factory=dict)
    conditioning: ConditioningTrace
    deletion: DeletionSummary
    preprocess: List[PreprocessCheck] = Field(default_factory=list)
    nice_edges: int = 0
    gap_edges: int = 0
    alpha_observation_holds: Optional[bool] = None
    trials: List[TrialRecord] = Field(default_factory=list)
    valid_window: Tuple[float, float]
    theorem_window: Tuple[float, float]
    chosen: ChosenSet
    edge_audit: List[EdgeAudit] = Field(default_factory=list)
    information: Dict[str, float] = Field(default_factory=dict)

    class Config:
        json_schema_extra = {
            "example": {
                "kind": "pipeline",
                "instance_hash": "3f2a...",
                "sdp_value": 0.0,
                "chosen": {"trial": 3, "members": [0, 1, 2], "size": 3, "target_size": 3,
                           "hypergraph_expansion": 0.0, "phi_v": 0.0, "convention": "size"}
            }
        }


class SolveReport(BaseModel):
    """Reporte del subcomando solve"""
    kind: Literal["solve"] = "solve"
    instance_hash: str
    delta: float
    rounds: int
    tol: float
    objective: float
    problem: Dict[str, Any]
    diagnostics: Dict[str, Any]
    moments: Dict[str, Any]
    assignment_objective: Optional[float] = Field(None, description="Objetivo de la asignación de --vectors")


class OracleReport(BaseModel):
    """Reporte del subcomando oracle"""
    kind: Literal["oracle"] = "oracle"
    instance_hash: str
    delta: float
    value: float
    set: List[int]
    convention: str


class InstanceReport(BaseModel):
    """Reporte de subcomandos que producen instancias (reduce, gap, degreduce)"""
    kind: Literal["reduce", "gap", "degreduce"]
    instance_hash: str
    outputs: List[str]
    summary: Dict[str, Any] = Field(default_factory=dict)


class VerifyReport(BaseModel):
    """Resumen de una verificación (las filas completas van al CSV)"""
    kind: Literal["verify-lemma", "verify-cdf", "verify-conc"]
    seed: int
    rows: int
    failures: int
    passed: bool
    csv: Optional[str] = None
    summary: Dict[str, Any] = Field(default_factory=dict)


class ErrorReport(BaseModel):
    """Reporte escrito cuando una corrida termina con error"""
    kind: Literal["error"] = "error"
    command: str
    error: str
    exit_code: int
    detail: str
    context: Dict[str, Any] = Field(default_factory=dict)
