"""
Modelo de ensamble gaussiano (GaussianEnsembleSpec)
"""
from dataclasses import dataclass

import numpy as np

from ..utils.errors import InvalidInputError
from .graph import _readonly

UNIT_TOL = 1e-12
PSD_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class GaussianEnsembleSpec:
    """
    Direcciones unitarias z̄_1..z̄_d en dimensión r; g_i = ⟨g, z̄_i⟩ con g ~ N(0, I_r)

    Attributes:
        directions: matriz d × r con una dirección unitaria por fila
        seed: semilla de 64 bits
    """

    directions: np.ndarray
    seed: int = 0

    def __post_init__(self):
        directions = np.atleast_2d(np.asarray(self.directions, dtype=np.float64))
        norms = np.linalg.norm(directions, axis=1)
        if np.any(np.abs(norms - 1.0) > UNIT_TOL):
            raise InvalidInputError(
                "Las direcciones deben tener norma 1",
                {"max_norm_error": float(np.abs(norms - 1.0).max())}
            )
        object.__setattr__(self, "directions", _readonly(directions))

    @classmethod
    def from_correlation(cls, rho: np.ndarray, seed: int = 0) -> "GaussianEnsembleSpec":
        """
        Construir direcciones a partir de una matriz de correlación

        Raises:
            InvalidInputError: matriz no simétrica, diagonal distinta de 1 o no PSD
        """
        rho = np.asarray(rho, dtype=np.float64)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise InvalidInputError("La correlación debe ser una matriz cuadrada")
        if not np.allclose(rho, rho.T, atol=PSD_TOL):
            raise InvalidInputError("La correlación no es simétrica")
        if np.any(np.abs(np.diag(rho) - 1.0) > PSD_TOL):
            raise InvalidInputError("La correlación debe tener diagonal unitaria")
        eigenvalues, eigenvectors = np.linalg.eigh((rho + rho.T) / 2.0)
        if eigenvalues.min() < -PSD_TOL:
            raise InvalidInputError(
                "La correlación no es PSD",
                {"min_eigenvalue": float(eigenvalues.min())}
            )
        directions = eigenvectors * np.sqrt(np.clip(eigenvalues, 0.0, None))[None, :]
        directions /= np.linalg.norm(directions, axis=1)[:, None]
        return cls(directions=directions, seed=seed)

    @property
    def d(self) -> int:
        return int(self.directions.shape[0])

    @property
    def dimension(self) -> int:
        return int(self.directions.shape[1])

    def correlation(self) -> np.ndarray:
        return self.directions @ self.directions.T

    def __repr__(self):
        return f"<GaussianEnsembleSpec(d={self.d}, r={self.dimension}, seed={self.seed})>"
