"""
Schemas de archivos de instancia (hipergrafos y asignaciones vectoriales)
"""
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator


class HypergraphVertex(BaseModel):
    """Vértice con peso W"""
    id: int = Field(..., ge=0, description="Índice del vértice (base 0)")
    W: float = Field(1.0, ge=0, description="Peso del vértice")


class HypergraphEdge(BaseModel):
    """Hiperarista con peso w y vértice asociado pi"""
    members: List[int] = Field(..., min_length=1, description="Vértices de la hiperarista")
    w: float = Field(1.0, ge=0, description="Peso de la hiperarista")
    pi: Optional[int] = Field(None, ge=0, description="Vértice asociado π(e) ∈ e")


class HypergraphFile(BaseModel):
    """Archivo JSON de hipergrafo"""
    vertices: List[HypergraphVertex]
    edges: List[HypergraphEdge]
    n_source: Optional[int] = Field(None, ge=0, description="Vértices 0..n_source-1 provienen de V_G")

    @model_validator(mode="after")
    def check_ids(self) -> "HypergraphFile":
        ids = [vertex.id for vertex in self.vertices]
        if ids != list(range(len(ids))):
            raise ValueError("Los ids de vértice deben ser 0..n-1 en orden")
        with_pi = [edge.pi is not None for edge in self.edges]
        if any(with_pi) and not all(with_pi):
            raise ValueError("pi debe estar en todas las hiperaristas o en ninguna")
        return self

    class Config:
        json_schema_extra = {
            "example": {
                "vertices": [{"id": 0, "W": 1.0}, {"id": 1, "W": 1.0}, {"id": 2, "W": 0.0}],
                "edges": [
                    {"members": [0, 2], "w": 1.0, "pi": 0},
                    {"members": [1, 2], "w": 1.0, "pi": 1},
                    {"members": [0, 1, 2], "w": 0.0, "pi": 2}
                ],
                "n_source": 2
            }
        }


class VectorFile(BaseModel):
    """Asignación vectorial: φ̄ y una fila por vértice"""
    phi: List[float]
    vectors: List[List[float]]
    delta: Optional[float] = Field(None, gt=0, le=0.5)
    objective: Optional[float] = None
