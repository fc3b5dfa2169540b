"""
Configuración de SSVE-PY
"""
from typing import Tuple

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Configuración de la aplicación"""

    # App Configuration
    APP_NAME: str = "SSVE-PY - Small-Set Vertex Expansion Toolkit"
    APP_VERSION: str = "1.0.0"
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

    # SDP Configuration
    SDP_SOLVER: str = "CLARABEL"
    SDP_FALLBACK_SOLVER: str = "SCS"
    SDP_TOL: float = 1e-6
    SDP_MAX_ITERS: int = 10_000
    SDP_LARGE_SIDE: int = 120  # a partir de este lado solo se usa SDP_FALLBACK_SOLVER
    SCS_MAX_ITERS: int = 100_000
    MAX_MOMENT_SIDE: int = 1200  # lado máximo de la matriz de momentos

    # Pipeline Configuration
    DEFAULT_ROUNDS: int = 2
    DEFAULT_TCAP: int = 2
    MAX_TCAP: int = 8
    DEFAULT_TRIALS: int = 64
    DEFAULT_THETA_EXPONENT: float = 12.0
    DELETE_THRESHOLD: float = 0.1
    VALID_WINDOW: Tuple[float, float] = (0.9, 1.1)
    THEOREM_WINDOW: Tuple[float, float] = (0.99, 1.01)

    # Oracle Configuration
    ORACLE_MAX_N: int = 24
    HSSE_ORACLE_MAX_N: int = 20

    # Verification Configuration
    CALIBRATION_K: float = 30.0
    C0: float = 24.0
    MC_TRIALS: int = 200_000
    MC_BATCH: int = 20_000

    # Runtime
    SSVE_THREADS: int = 1  # solo afecta velocidad, nunca resultados

    class Config:
        env_file = ".env"
        case_sensitive = True


settings = Settings()
