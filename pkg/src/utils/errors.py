"""
Errores de dominio de SSVE-PY

Cada error lleva un código de salida y un detalle, igual que una
excepción HTTP lleva status_code y detail.
"""
from typing import Any, Dict, Optional


class SSVEError(Exception):
    """Error base del toolkit"""

    exit_code: int = 1

    def __init__(self, detail: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(detail)
        self.detail = detail
        self.context = context or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "exit_code": self.exit_code,
            "detail": self.detail,
            "context": self.context
        }


class InvalidInputError(SSVEError):
    """Entrada mal formada o que viola un invariante de construcción"""
    exit_code = 2


class DegenerateInputError(SSVEError):
    """Entrada válida pero degenerada (denominadores nulos, condicionamiento imposible, ...)"""
    exit_code = 2


class OracleScaleError(SSVEError):
    """Instancia demasiado grande para enumeración exacta"""
    exit_code = 2


class SolverError(SSVEError):
    """El SDP no convergió dentro del presupuesto de iteraciones"""
    exit_code = 1


class UsageError(SSVEError):
    """Flags o subcomandos desconocidos"""
    exit_code = 64
