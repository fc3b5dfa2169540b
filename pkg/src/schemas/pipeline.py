"""
Schema de configuración de una corrida del pipeline
"""
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from ..config import settings


class PipelineConfig(BaseModel):
    """Parámetros de corrida; se incrustan completos en cada reporte"""
    delta: float = Field(..., gt=0, le=0.5, description="Peso relativo objetivo δ")
    rounds: int = Field(settings.DEFAULT_ROUNDS, description="Grado R de la relajación")
    tcap: int = Field(settings.DEFAULT_TCAP, ge=0, le=settings.MAX_TCAP, description="Tamaño máximo del conjunto condicionado")
    theta: Optional[float] = Field(None, ge=0, le=0.1, description="Desplazamiento θ (por defecto δ^12)")
    trials: int = Field(settings.DEFAULT_TRIALS, ge=1, description="Ensayos de redondeo")
    tol: float = Field(settings.SDP_TOL, gt=0, description="Tolerancia del SDP")
    seed: int = Field(0, ge=0, description="Semilla raíz")
    convention: Literal["size", "min"] = Field("size", description="Denominador de φV")
    mode: Literal["ssve", "hsse"] = Field("ssve", description="SSVE sobre un grafo o HSSE sobre un hipergrafo")

    @field_validator("rounds")
    @classmethod
    def check_rounds(cls, value: int) -> int:
        if value not in (2, 4):
            raise ValueError("rounds debe ser 2 o 4")
        return value

    @model_validator(mode="after")
    def fill_theta(self) -> "PipelineConfig":
        if self.theta is None:
            self.theta = self.delta ** settings.DEFAULT_THETA_EXPONENT
        return self

    class Config:
        json_schema_extra = {
            "example": {
                "delta": 0.25,
                "rounds": 2,
                "tcap": 2,
                "theta": 5.96e-08,
                "trials": 64,
                "tol": 1e-6,
                "seed": 7,
                "convention": "size",
                "mode": "ssve"
            }
        }
